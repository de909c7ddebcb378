#include "twosq/represent.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace twosq {

Representation Representation::make(Natural x, Natural y) {
    Representation r{std::max(x, y), std::min(x, y), false};
    r.coprime = gcd(r.a, r.b) == 1;
    return r;
}

void sort_canonical(std::vector<Representation>& reps) {
    std::sort(reps.begin(), reps.end(), [](const Representation& l, const Representation& r) {
        return l.a != r.a ? l.a > r.a : l.b > r.b;
    });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
}

Analysis analyze(Natural n, const AnalyzeOptions& options) {
    Analysis out;
    out.eligibility = classify(n);
    if (!out.eligibility.eligible())
        throw std::invalid_argument(fmt::format("{} is not eligible ({}); classify it first", n,
                                                to_string(out.eligibility.status)));
    if (out.eligibility.roots_mod25.empty()) return out;

    // The smaller root suffices: negative t reaches the class of 25 - r.
    const int r = out.eligibility.roots_mod25.front();
    for (auto& branch : plan(n, r, options.refine)) {
        ScannedBranch sb{std::move(branch), {}};
        if (sb.branch.scannable()) {
            sb.result = scan_branch(sb.branch, options.scan);
            for (const auto& hit : sb.result.hits) {
                const Point p = recover_xy(sb.branch, hit);
                out.representations.push_back(Representation::make(p.x, p.y));
            }
        }
        out.branches.push_back(std::move(sb));
    }
    sort_canonical(out.representations);
    return out;
}

std::vector<Representation> representations(Natural n) { return analyze(n).representations; }

std::vector<Representation> oracle_representations(Natural n) {
    if (n < 0) throw std::domain_error("oracle_representations expects a natural number");
    std::vector<Representation> reps;
    const Natural top = isqrt(n);
    for (Natural x = 0; x <= top; ++x) {
        const Natural rest = n - x * x;
        const Natural y = isqrt(rest);
        if (y * y == rest) reps.push_back(Representation::make(x, y));
    }
    sort_canonical(reps);
    return reps;
}

}  // namespace twosq
