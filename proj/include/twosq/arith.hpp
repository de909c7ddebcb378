#pragma once

// Exact integer kernels shared by the rest of the library.
//
// Every scalar is a signed 64-bit integer. Quantities that are naturals by
// nature (N, squares, roots) are range-checked on entry; anything whose
// product could leave the 64-bit range is formed in a 128-bit intermediate.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace twosq {

using Natural = std::int64_t;
using Wide = __int128;

inline constexpr Natural kMaxNatural = std::numeric_limits<Natural>::max();

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Natural checked_add(Natural a, Natural b);
Natural checked_sub(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);

/// Narrow a 128-bit intermediate back to 64 bits or throw OverflowError.
Natural narrow(Wide v);

/// floor(sqrt(n)), exact. Throws std::domain_error for n < 0.
Natural isqrt(Natural n);

enum class Prefilter {
    None,  // plain isqrt confirmation
    Mod8,  // squares mod 8 are 0, 1, 4
    Full,  // mod 8, then mod 64 / 63 / 65 / 11 tables
};

/// Root r with r*r == n, or empty. Negative n is never a square.
/// The prefilter only ever skips the isqrt; it never changes the answer.
std::optional<Natural> is_perfect_square(Natural n, Prefilter filter = Prefilter::Full);

/// True if n mod 8 is a quadratic residue (0, 1 or 4). Works for negative n.
constexpr bool square_residue_mod8(Natural n) noexcept {
    const auto r = static_cast<unsigned>(((n % 8) + 8) % 8);
    return r == 0 || r == 1 || r == 4;
}

Natural gcd(Natural a, Natural b);

/// (p/g, q/g) with g = gcd(p, q). Throws std::domain_error when q == 0.
std::pair<Natural, Natural> reduce_fraction(Natural p, Natural q);

/// Floor-mod: result in [0, m) for m > 0.
constexpr Natural mod(Natural a, Natural m) noexcept {
    const Natural r = a % m;
    return r < 0 ? r + m : r;
}

/// Parse a decimal natural in [0, 2^63 - 1]. Throws std::invalid_argument on
/// malformed text and OverflowError when the value is out of range.
Natural parse_natural(const std::string& text);

std::string to_string(Wide v);

}  // namespace twosq
