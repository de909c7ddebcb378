#pragma once

#include <string_view>
#include <vector>

#include "twosq/arith.hpp"

namespace twosq {

enum class EligibilityStatus {
    Eligible,
    IneligibleMod4,
    IneligibleLastDigit,
    IneligibleTooSmall,
};

std::string_view to_string(EligibilityStatus s);

inline constexpr Natural kMinEligible = 9;

/// Whether the mod-25 method applies to n, plus the residue data that seeds
/// the scan. An eligible n with empty roots_mod25 has no representation as a
/// sum of two squares.
struct Eligibility {
    Natural n = 0;
    EligibilityStatus status = EligibilityStatus::IneligibleTooSmall;
    int n_mod4 = 0;
    int last_digit = 0;
    int n_mod25 = 0;
    std::vector<int> roots_mod25;  // ascending; empty or {r, 25 - r}

    bool eligible() const { return status == EligibilityStatus::Eligible; }

    friend bool operator==(const Eligibility&, const Eligibility&) = default;
};

Eligibility classify(Natural n);

/// All r in [0, 25) with r^2 = res (mod 25), ascending.
std::vector<int> mod25_sqrt(int res);

}  // namespace twosq
