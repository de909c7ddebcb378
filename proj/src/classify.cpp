#include "twosq/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace twosq {

namespace {

// Square roots mod 25 of the units: for res coprime to 5 there are either
// none or exactly two, found from the roots mod 5 lifted once (Hensel).
std::vector<int> unit_roots_mod25(int res) {
    std::vector<int> roots;
    for (int r5 = 1; r5 < 5; ++r5) {
        if ((r5 * r5 - res) % 5 != 0) continue;
        // (r5 + 5k)^2 = res (mod 25)  <=>  r5^2 + 10 r5 k = res (mod 25)
        for (int k = 0; k < 5; ++k) {
            const int r = r5 + 5 * k;
            if ((r * r - res) % 25 == 0) {
                roots.push_back(r);
                break;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::string_view to_string(EligibilityStatus s) {
    switch (s) {
        case EligibilityStatus::Eligible: return "Eligible";
        case EligibilityStatus::IneligibleMod4: return "IneligibleMod4";
        case EligibilityStatus::IneligibleLastDigit: return "IneligibleLastDigit";
        case EligibilityStatus::IneligibleTooSmall: return "IneligibleTooSmall";
    }
    return "?";
}

std::vector<int> mod25_sqrt(int res) {
    if (res < 0 || res >= 25) throw std::domain_error("residue out of range [0, 25)");
    if (res % 5 != 0) return unit_roots_mod25(res);
    // Multiples of 5: only 0 has roots (0, 5, 10, 15, 20); 5, 10, 15, 20 have none.
    if (res == 0) return {0, 5, 10, 15, 20};
    return {};
}

Eligibility classify(Natural n) {
    if (n < 0) throw std::domain_error("classify expects a natural number");
    Eligibility e;
    e.n = n;
    e.n_mod4 = static_cast<int>(n % 4);
    e.last_digit = static_cast<int>(n % 10);
    e.n_mod25 = static_cast<int>(n % 25);

    if (n < kMinEligible)
        e.status = EligibilityStatus::IneligibleTooSmall;
    else if (e.last_digit != 1 && e.last_digit != 9)
        e.status = EligibilityStatus::IneligibleLastDigit;
    else if (e.n_mod4 != 1)
        e.status = EligibilityStatus::IneligibleMod4;
    else
        e.status = EligibilityStatus::Eligible;

    if (e.eligible()) e.roots_mod25 = mod25_sqrt(e.n_mod25);
    return e;
}

}  // namespace twosq
