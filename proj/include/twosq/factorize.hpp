#pragma once

// Factors from two representations N = a^2 + b^2 = c^2 + d^2.
//
// Two routes are provided and cross-checked:
//  - the (k, l, m, n) construction: k = gcd(a - c, d - b), a - c = k l,
//    d - b = k m, a + c = m n, d + b = l n, and then
//    4N = (k^2 + n^2)(l^2 + m^2);
//  - the reduced-fraction route: a^2 - d^2 = c^2 - b^2, reduce
//    (a + d)/(c + b) to p/q, and gcd(N, p^2 + q^2) is a proper divisor.

#include <utility>
#include <vector>

#include "twosq/arith.hpp"
#include "twosq/represent.hpp"

namespace twosq {

enum class Arrangement {
    EvenOdd,  // a, c the even members, b, d the odd ones
    Mixed,    // a, b as in rep1; c the member of rep2 with parity opposite to a
};

struct TwoRepWitness {
    Representation rep1;
    Representation rep2;
    Natural a = 0, b = 0, c = 0, d = 0;
    Natural u = 0, v = 0;
    Natural k = 0, l = 0, m = 0, n = 0;
    Natural f1 = 0, f2 = 0;

    friend bool operator==(const TwoRepWitness&, const TwoRepWitness&) = default;
};

/// Requires two distinct representations of odd N. Throws
/// std::invalid_argument on bad input and InternalError if an identity fails.
TwoRepWitness klmn_factor(Natural N, const Representation& rep1, const Representation& rep2,
                          Arrangement arrangement = Arrangement::EvenOdd);

/// Proper divisor g of N, 1 < g < N.
Natural gcd_fraction_factor(Natural N, const Representation& rep1, const Representation& rep2);

struct Factorization {
    Natural f1 = 0;  // f1 <= f2, f1 * f2 = N
    Natural f2 = 0;
    TwoRepWitness witness;
    Natural divisor = 0;  // from the fraction route
};

/// The two lexicographically smallest (a, b) of reps, passed through both
/// routes. Throws std::invalid_argument with fewer than two representations.
Factorization factor(Natural N, std::vector<Representation> reps);

}  // namespace twosq
