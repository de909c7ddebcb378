// Command-line front end.
//
// Exit codes: 0 success (whatever the verdict), 1 certificate rejected by
// `verify`, 2 bad input (parse errors, out-of-range numbers, unreadable files).

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "twosq/certify.hpp"
#include "twosq/classify.hpp"
#include "twosq/report.hpp"
#include "twosq/represent.hpp"

namespace {

using namespace twosq;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_arg(const std::string& text) {
    try {
        return parse_natural(text);
    } catch (const OverflowError&) {
        throw InputError(fmt::format("'{}' exceeds the supported maximum 9223372036854775807", text));
    } catch (const std::invalid_argument&) {
        throw InputError(fmt::format("'{}' is not a nonnegative decimal integer", text));
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + out_path);
    f << text;
}

std::string classify_text(const Eligibility& e, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = std::to_string(e.n);
        j["status"] = std::string(to_string(e.status));
        j["n_mod4"] = e.n_mod4;
        j["last_digit"] = e.last_digit;
        j["n_mod25"] = e.n_mod25;
        j["roots_mod25"] = e.roots_mod25;
        return j.dump(2) + "\n";
    }
    std::string s = fmt::format("{}: {}\n  n mod 4 = {}, last digit {}, n mod 25 = {}\n", e.n, to_string(e.status),
                                e.n_mod4, e.last_digit, e.n_mod25);
    if (e.eligible()) {
        if (e.roots_mod25.empty())
            s += "  not a square mod 25: no representation as a sum of two squares\n";
        else
            s += fmt::format("  roots mod 25: {}/{}\n", e.roots_mod25[0], e.roots_mod25[1]);
    }
    return s;
}

Analysis tables_for(Natural n) {
    AnalyzeOptions opts;
    opts.scan.collect_rows = true;
    return analyze(n, opts);
}

std::string prove_text(Natural n, const std::string& format, bool emit_tables) {
    const Certificate cert = decide(n);
    const bool tables = emit_tables && cert.verdict != Verdict::Ineligible;
    if (format == "json") {
        if (!tables) return to_json(cert);
        nlohmann::ordered_json j;
        j["certificate"] = nlohmann::ordered_json::parse(to_json(cert));
        j["tables"] = render_analysis(tables_for(n));
        return j.dump(2) + "\n";
    }
    std::string s = to_text(cert);
    if (tables) s += "\n" + render_analysis(tables_for(n));
    return s;
}

int run_verify(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    Certificate cert;
    try {
        cert = certificate_from_json(buf.str());
    } catch (const CertificateFormatError& e) {
        throw InputError(e.what());
    }
    if (verify(cert)) {
        std::cout << fmt::format("valid: {} is {}\n", cert.n, to_string(cert.verdict));
        return kOk;
    }
    std::cout << fmt::format("REJECTED: certificate for {} does not check out\n", cert.n);
    return kRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums of two squares: primality and factors for N = 1 (mod 4) ending in 1 or 9"};
    app.require_subcommand(1);

    std::string number, classify_format, prove_format, out_path, from_text, to_text_arg, file;
    bool emit_tables = false;
    unsigned jobs = 1;

    auto* classify_cmd = app.add_subcommand("classify", "show whether the method applies to N");
    classify_cmd->add_option("N", number)->required();
    classify_cmd->add_option("--format", classify_format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* prove_cmd = app.add_subcommand("prove", "decide N and print its certificate");
    prove_cmd->add_option("N", number)->required();
    prove_cmd->add_option("--format", prove_format, "json or text")->check(CLI::IsMember({"json", "text"}))->default_val("json");
    prove_cmd->add_flag("--emit-tables", emit_tables, "include the scan tables");
    prove_cmd->add_option("--out", out_path, "write to FILE instead of stdout");

    auto* scan_cmd = app.add_subcommand("scan", "print every branch and its tables");
    scan_cmd->add_option("N", number)->required();
    scan_cmd->add_option("--out", out_path, "write to FILE instead of stdout");

    auto* sweep_cmd = app.add_subcommand("sweep", "decide every eligible N in [FROM, TO] and write CSV");
    sweep_cmd->add_option("FROM", from_text)->required();
    sweep_cmd->add_option("TO", to_text_arg)->required();
    sweep_cmd->add_option("--out", out_path, "write to FILE instead of stdout");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u))->default_val(1);

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate document");
    verify_cmd->add_option("FILE", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify_cmd) {
            emit(classify_text(classify(parse_arg(number)), classify_format), out_path);
        } else if (*prove_cmd) {
            emit(prove_text(parse_arg(number), prove_format, emit_tables), out_path);
        } else if (*scan_cmd) {
            const Natural n = parse_arg(number);
            const Eligibility e = classify(n);
            if (!e.eligible())
                throw InputError(fmt::format("{} is not eligible ({})", n, to_string(e.status)));
            emit(render_analysis(tables_for(n)), out_path);
        } else if (*sweep_cmd) {
            const Natural from = parse_arg(from_text);
            const Natural to = parse_arg(to_text_arg);
            if (from > to) throw InputError("FROM must not exceed TO");
            emit(sweep_csv(decide_range(from, to, jobs)), out_path);
        } else if (*verify_cmd) {
            return run_verify(file);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
