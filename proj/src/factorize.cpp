#include "twosq/factorize.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace twosq {

namespace {

void check_pair(Natural N, const Representation& rep1, const Representation& rep2) {
    for (const auto* r : {&rep1, &rep2}) {
        if (static_cast<Wide>(r->a) * r->a + static_cast<Wide>(r->b) * r->b != N)
            throw std::invalid_argument(fmt::format("({}, {}) is not a representation of {}", r->a, r->b, N));
    }
    if (rep1.a == rep2.a && rep1.b == rep2.b) throw std::invalid_argument("representations must be distinct");
}

Natural absdiff(Natural x, Natural y) { return x > y ? x - y : y - x; }

Wide sum_sq(Natural x, Natural y) { return static_cast<Wide>(x) * x + static_cast<Wide>(y) * y; }

}  // namespace

TwoRepWitness klmn_factor(Natural N, const Representation& rep1, const Representation& rep2,
                          Arrangement arrangement) {
    check_pair(N, rep1, rep2);
    if (N % 2 == 0) throw std::invalid_argument("klmn_factor needs an odd N");

    TwoRepWitness w{rep1, rep2};
    if (arrangement == Arrangement::EvenOdd) {
        const bool first_even = rep1.a % 2 == 0;
        w.a = first_even ? rep1.a : rep1.b;
        w.b = first_even ? rep1.b : rep1.a;
        const bool second_even = rep2.a % 2 == 0;
        w.c = second_even ? rep2.a : rep2.b;
        w.d = second_even ? rep2.b : rep2.a;
    } else {
        w.a = rep1.a;
        w.b = rep1.b;
        const bool opposite = (rep2.a % 2) != (rep1.a % 2);
        w.c = opposite ? rep2.a : rep2.b;
        w.d = opposite ? rep2.b : rep2.a;
    }

    // (a - c)(a + c) = (d - b)(d + b), and a - c, d - b share a sign.
    w.u = absdiff(w.a, w.c);
    w.v = absdiff(w.d, w.b);
    w.k = gcd(w.u, w.v);
    if (w.k == 0) throw InternalError("paired differences both vanish");
    w.l = w.u / w.k;
    w.m = w.v / w.k;
    if (w.m == 0 || (w.a + w.c) % w.m != 0) throw InternalError("m does not divide a + c");
    w.n = (w.a + w.c) / w.m;
    if (w.l * w.n != w.d + w.b) throw InternalError("l n != d + b");

    const Wide kn = sum_sq(w.k, w.n);
    const Wide lm = sum_sq(w.l, w.m);
    if (kn * lm != static_cast<Wide>(4) * N) throw InternalError("4N != (k^2 + n^2)(l^2 + m^2)");

    // Share out the 4: both of k, n even, or else all of k, n, l, m odd.
    Wide fa, fb;
    if (w.k % 2 == 0 && w.n % 2 == 0) {
        fa = sum_sq(w.k / 2, w.n / 2);
        fb = lm;
    } else if (w.k % 2 == 1 && w.n % 2 == 1 && w.l % 2 == 1 && w.m % 2 == 1) {
        fa = kn / 2;
        fb = lm / 2;
    } else {
        throw InternalError(fmt::format("unexpected parities k={} n={} l={} m={}", w.k, w.n, w.l, w.m));
    }
    w.f1 = narrow(std::min(fa, fb));
    w.f2 = narrow(std::max(fa, fb));
    if (static_cast<Wide>(w.f1) * w.f2 != N || w.f1 <= 1 || w.f2 >= N)
        throw InternalError(fmt::format("trivial split {} * {} of {}", w.f1, w.f2, N));
    return w;
}

Natural gcd_fraction_factor(Natural N, const Representation& rep1, const Representation& rep2) {
    check_pair(N, rep1, rep2);
    // a^2 + b^2 = c^2 + d^2  =>  (a - d)(a + d) = (c - b)(c + b)
    const auto [p, q] = reduce_fraction(rep1.a + rep2.b, rep2.a + rep1.b);
    const auto s = static_cast<Natural>(sum_sq(p, q) % N);
    const Natural g = gcd(N, s);
    if (g <= 1 || g >= N) throw InternalError(fmt::format("fraction {}/{} gives no divisor of {}", p, q, N));
    return g;
}

Factorization factor(Natural N, std::vector<Representation> reps) {
    std::sort(reps.begin(), reps.end(), [](const Representation& l, const Representation& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if (reps.size() < 2) throw std::invalid_argument("factor needs at least two representations");

    Factorization f;
    f.witness = klmn_factor(N, reps[0], reps[1]);
    f.f1 = f.witness.f1;
    f.f2 = f.witness.f2;
    f.divisor = gcd_fraction_factor(N, reps[0], reps[1]);
    if ((static_cast<Wide>(f.f1) * f.f2) % f.divisor != 0)
        throw InternalError("the two factor routes disagree");
    return f;
}

}  // namespace twosq
