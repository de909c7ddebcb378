#include <set>

#include "json.hpp"

#include "twosq/certify.hpp"

namespace twosq {

namespace {

using Json = nlohmann::ordered_json;

Json num(Natural v) { return std::to_string(v); }

Json rep_json(const Representation& r) { return Json{{"a", num(r.a)}, {"b", num(r.b)}, {"coprime", r.coprime}}; }

[[noreturn]] void fail(const std::string& what) { throw CertificateFormatError("malformed certificate: " + what); }

void expect_keys(const Json& j, const std::set<std::string>& keys, const std::string& where) {
    if (!j.is_object()) fail(where + " is not an object");
    for (const auto& [k, _] : j.items())
        if (!keys.contains(k)) fail("unexpected key '" + k + "' in " + where);
    for (const auto& k : keys)
        if (!j.contains(k)) fail("missing key '" + k + "' in " + where);
}

Natural read_num(const Json& j, const std::string& key) {
    const Json& v = j.at(key);
    if (!v.is_string()) fail("'" + key + "' must be a decimal string");
    try {
        return parse_natural(v.get<std::string>());
    } catch (const std::exception& e) {
        fail("'" + key + "': " + e.what());
    }
}

Representation read_rep(const Json& j, const std::string& where) {
    expect_keys(j, {"a", "b", "coprime"}, where);
    if (!j.at("coprime").is_boolean()) fail("'coprime' must be a boolean");
    return {read_num(j, "a"), read_num(j, "b"), j.at("coprime").get<bool>()};
}

}  // namespace

std::string to_json(const Certificate& cert) {
    Json j;
    j["n"] = num(cert.n);
    j["verdict"] = std::string(to_string(cert.verdict));
    j["representations"] = Json::array();
    for (const auto& r : cert.representations) j["representations"].push_back(rep_json(r));
    j["factors"] = cert.factors ? Json::array({num(cert.factors->first), num(cert.factors->second)}) : Json(nullptr);
    if (cert.witness) {
        const auto& w = *cert.witness;
        j["witness"] = Json{{"rep1", rep_json(w.rep1)}, {"rep2", rep_json(w.rep2)},
                            {"a", num(w.a)}, {"b", num(w.b)}, {"c", num(w.c)}, {"d", num(w.d)},
                            {"u", num(w.u)}, {"v", num(w.v)}, {"k", num(w.k)}, {"l", num(w.l)},
                            {"m", num(w.m)}, {"n", num(w.n)}, {"f1", num(w.f1)}, {"f2", num(w.f2)}};
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = cert.notes;
    j["method_version"] = cert.method_version;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(e.what());
    }
    if (j.is_object() && j.contains("certificate")) {
        Json inner = j.at("certificate");
        j = std::move(inner);
    }
    expect_keys(j, {"n", "verdict", "representations", "factors", "witness", "notes", "method_version"},
                "certificate");

    Certificate c;
    c.n = read_num(j, "n");
    if (!j.at("verdict").is_string()) fail("'verdict' must be a string");
    const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!verdict) fail("unknown verdict");
    c.verdict = *verdict;

    if (!j.at("representations").is_array()) fail("'representations' must be an array");
    for (const auto& r : j.at("representations")) c.representations.push_back(read_rep(r, "representation"));

    const Json& f = j.at("factors");
    if (!f.is_null()) {
        if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_string())
            fail("'factors' must be null or two decimal strings");
        try {
            c.factors = std::pair{parse_natural(f[0].get<std::string>()), parse_natural(f[1].get<std::string>())};
        } catch (const std::exception& e) {
            fail(std::string("'factors': ") + e.what());
        }
    }

    const Json& w = j.at("witness");
    if (!w.is_null()) {
        expect_keys(w, {"rep1", "rep2", "a", "b", "c", "d", "u", "v", "k", "l", "m", "n", "f1", "f2"}, "witness");
        TwoRepWitness t;
        t.rep1 = read_rep(w.at("rep1"), "witness.rep1");
        t.rep2 = read_rep(w.at("rep2"), "witness.rep2");
        t.a = read_num(w, "a");
        t.b = read_num(w, "b");
        t.c = read_num(w, "c");
        t.d = read_num(w, "d");
        t.u = read_num(w, "u");
        t.v = read_num(w, "v");
        t.k = read_num(w, "k");
        t.l = read_num(w, "l");
        t.m = read_num(w, "m");
        t.n = read_num(w, "n");
        t.f1 = read_num(w, "f1");
        t.f2 = read_num(w, "f2");
        c.witness = t;
    }

    if (!j.at("notes").is_string() || !j.at("method_version").is_string())
        fail("'notes' and 'method_version' must be strings");
    c.notes = j.at("notes").get<std::string>();
    c.method_version = j.at("method_version").get<std::string>();
    return c;
}

}  // namespace twosq
