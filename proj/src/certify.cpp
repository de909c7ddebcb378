#include "twosq/certify.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

namespace twosq {

namespace {

std::string ineligible_note(const Eligibility& e) {
    switch (e.status) {
        case EligibilityStatus::IneligibleTooSmall:
            return fmt::format("not eligible: below the minimum {}", kMinEligible);
        case EligibilityStatus::IneligibleLastDigit:
            return fmt::format("not eligible: last digit {} is not 1 or 9", e.last_digit);
        case EligibilityStatus::IneligibleMod4:
            return fmt::format("not eligible: n = {} (mod 4)", e.n_mod4);
        case EligibilityStatus::Eligible: break;
    }
    throw InternalError("ineligible_note on an eligible number");
}

// The verdict rules, shared by decide (scan representations) and verify
// (oracle representations).
Certificate assemble(Natural n, const Eligibility& e, std::vector<Representation> reps) {
    Certificate c;
    c.n = n;
    if (!e.eligible()) {
        c.verdict = Verdict::Ineligible;
        c.notes = ineligible_note(e);
        return c;
    }
    c.representations = std::move(reps);
    if (c.representations.empty()) {
        c.verdict = Verdict::CompositeNoRepresentation;
        c.notes = "no representation as a sum of two squares; n has at least two prime factors of the form 4k+3";
        return c;
    }
    if (c.representations.size() == 1) {
        const auto& r = c.representations.front();
        if (r.coprime && r.b >= 1) {
            c.verdict = Verdict::Prime;
            c.notes = "unique representation, members coprime";
            return c;
        }
        // gcd(a, b) = g > 1, so g^2 divides n.
        const Natural g = gcd(r.a, r.b);
        const Natural g2 = checked_mul(g, g);
        c.verdict = Verdict::CompositeWithFactors;
        c.factors = g2 == n ? std::pair{g, g} : std::pair{std::min(g2, n / g2), std::max(g2, n / g2)};
        c.notes = fmt::format("unique representation, members share the factor {}; {} divides n", g, g2);
        return c;
    }
    const Factorization f = factor(n, c.representations);
    c.verdict = Verdict::CompositeWithFactors;
    c.factors = std::pair{f.f1, f.f2};
    c.witness = f.witness;
    c.notes = fmt::format("{} representations; factors from the first two in (a, b) order", c.representations.size());
    return c;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Prime: return "Prime";
        case Verdict::CompositeWithFactors: return "CompositeWithFactors";
        case Verdict::CompositeNoRepresentation: return "CompositeNoRepresentation";
        case Verdict::Ineligible: return "Ineligible";
    }
    return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
    for (Verdict v : {Verdict::Prime, Verdict::CompositeWithFactors, Verdict::CompositeNoRepresentation,
                      Verdict::Ineligible})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

Certificate decide(Natural n) {
    const Eligibility e = classify(n);
    return assemble(n, e, e.eligible() ? representations(n) : std::vector<Representation>{});
}

bool is_prime_trial_division(Natural n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    const Natural top = isqrt(n);
    for (Natural p = 3; p <= top; p += 2)
        if (n % p == 0) return false;
    return true;
}

bool verify(const Certificate& cert) {
    if (cert.method_version != kMethodVersion || cert.n < 0) return false;
    if (cert.factors) {
        const auto [f1, f2] = *cert.factors;
        if (f1 <= 1 || f2 <= 1 || f1 > f2 || static_cast<Wide>(f1) * f2 != cert.n) return false;
    }
    const Eligibility e = classify(cert.n);
    try {
        const Certificate expected =
            assemble(cert.n, e, e.eligible() ? oracle_representations(cert.n) : std::vector<Representation>{});
        if (cert != expected) return false;
    } catch (const std::exception&) {
        return false;
    }
    if (cert.verdict == Verdict::Prime && !is_prime_trial_division(cert.n)) return false;
    return true;
}

std::vector<Certificate> decide_range(Natural from, Natural to, unsigned jobs) {
    std::vector<Natural> todo;
    for (Natural n = std::max<Natural>(from, 0); n <= to; ++n) {
        if (classify(n).eligible()) todo.push_back(n);
        if (n == kMaxNatural) break;
    }
    std::vector<Certificate> out(todo.size());
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < todo.size(); ++i) out[i] = decide(todo[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < todo.size(); i += jobs) out[i] = decide(todo[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::string to_text(const Certificate& cert) {
    std::string s = fmt::format("n: {}\nverdict: {}\n", cert.n, to_string(cert.verdict));
    s += "representations:";
    if (cert.representations.empty()) s += " none";
    for (const auto& r : cert.representations)
        s += fmt::format(" {}^2+{}^2{}", r.a, r.b, r.coprime ? "" : " (not coprime)");
    s += "\n";
    if (cert.factors) s += fmt::format("factors: {} * {}\n", cert.factors->first, cert.factors->second);
    if (cert.witness) {
        const auto& w = *cert.witness;
        s += fmt::format("witness: a={} b={} c={} d={} u={} v={} k={} l={} m={} n={} -> {} * {}\n", w.a, w.b,
                         w.c, w.d, w.u, w.v, w.k, w.l, w.m, w.n, w.f1, w.f2);
    }
    s += fmt::format("notes: {}\nmethod: {}\n", cert.notes, cert.method_version);
    return s;
}

}  // namespace twosq
