#include "twosq/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace twosq {

namespace {

template <std::size_t M>
constexpr std::array<bool, M> square_table() {
    std::array<bool, M> t{};
    for (std::size_t i = 0; i < M; ++i) t[(i * i) % M] = true;
    return t;
}

constexpr auto kSq64 = square_table<64>();
constexpr auto kSq63 = square_table<63>();
constexpr auto kSq65 = square_table<65>();
constexpr auto kSq11 = square_table<11>();

}  // namespace

Natural checked_add(Natural a, Natural b) {
    Natural r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Natural checked_sub(Natural a, Natural b) {
    Natural r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Natural checked_mul(Natural a, Natural b) {
    Natural r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Natural narrow(Wide v) {
    if (v > static_cast<Wide>(kMaxNatural) || v < static_cast<Wide>(std::numeric_limits<Natural>::min()))
        throw OverflowError("value exceeds 64-bit range");
    return static_cast<Natural>(v);
}

Natural isqrt(Natural n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    if (n < 2) return n;
    const auto un = static_cast<std::uint64_t>(n);
    // Start above the root; Newton's iteration then decreases monotonically.
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(un) + 1) / 2);
    for (;;) {
        const std::uint64_t y = (x + un / x) / 2;
        if (y >= x) return static_cast<Natural>(x);
        x = y;
    }
}

std::optional<Natural> is_perfect_square(Natural n, Prefilter filter) {
    if (n < 0) return std::nullopt;
    if (filter != Prefilter::None) {
        if (!square_residue_mod8(n)) return std::nullopt;
        if (filter == Prefilter::Full) {
            const auto un = static_cast<std::uint64_t>(n);
            if (!kSq64[un & 63]) return std::nullopt;
            const std::uint64_t r = un % (63ULL * 65 * 11);
            if (!kSq63[r % 63] || !kSq65[r % 65] || !kSq11[r % 11]) return std::nullopt;
        }
    }
    const Natural r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Natural gcd(Natural a, Natural b) {
    if (a < 0 || b < 0) throw std::domain_error("gcd expects naturals");
    return std::gcd(a, b);
}

std::pair<Natural, Natural> reduce_fraction(Natural p, Natural q) {
    if (q == 0) throw std::domain_error("fraction with zero denominator");
    const Natural g = gcd(p, q);
    return {p / g, q / g};
}

Natural parse_natural(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a decimal natural: '" + text + "'");
    Natural v = 0;
    for (char c : text) {
        if (__builtin_mul_overflow(v, Natural{10}, &v) || __builtin_add_overflow(v, Natural{c - '0'}, &v))
            throw OverflowError("number exceeds 2^63 - 1: " + text);
    }
    return v;
}

std::string to_string(Wide v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string out;
    while (v != 0) {
        const int d = static_cast<int>(v % 10);
        out.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace twosq
