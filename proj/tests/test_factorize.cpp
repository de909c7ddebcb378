#include "doctest.h"
#include "oracles.hpp"
#include "twosq/factorize.hpp"

using namespace twosq;

namespace {

Representation rep(Natural a, Natural b) { return Representation::make(a, b); }

}  // namespace

TEST_CASE("klmn on 1000009, even/odd arrangement") {
    const auto w = klmn_factor(1000009, rep(1000, 3), rep(972, 235));
    CHECK(w.a == 1000);
    CHECK(w.b == 3);
    CHECK(w.c == 972);
    CHECK(w.d == 235);
    CHECK(w.u == 28);
    CHECK(w.v == 232);
    CHECK(w.k == 4);
    CHECK(w.l == 7);
    CHECK(w.m == 58);
    CHECK(w.n == 34);
    CHECK(w.f1 == 293);
    CHECK(w.f2 == 3413);
}

TEST_CASE("klmn on 1000009, mixed arrangement reproduces k=51 l=15 m=19 n=65") {
    const auto w = klmn_factor(1000009, rep(1000, 3), rep(972, 235), Arrangement::Mixed);
    CHECK(w.c == 235);
    CHECK(w.d == 972);
    CHECK(w.u == 765);
    CHECK(w.v == 969);
    CHECK(w.k == 51);
    CHECK(w.l == 15);
    CHECK(w.m == 19);
    CHECK(w.n == 65);
    CHECK(w.f1 == 293);
    CHECK(w.f2 == 3413);
}

TEST_CASE("klmn on 169") {
    const auto w = klmn_factor(169, rep(13, 0), rep(12, 5));
    CHECK(w.a == 0);
    CHECK(w.b == 13);
    CHECK(w.c == 12);
    CHECK(w.d == 5);
    CHECK(w.u == 12);
    CHECK(w.v == 8);
    CHECK(w.k == 4);
    CHECK(w.l == 3);
    CHECK(w.m == 2);
    CHECK(w.n == 6);
    CHECK(w.f1 == 13);
    CHECK(w.f2 == 13);
}

TEST_CASE("klmn input errors") {
    CHECK_THROWS_AS(klmn_factor(1000009, rep(1000, 3), rep(1000, 3)), std::invalid_argument);
    CHECK_THROWS_AS(klmn_factor(1000009, rep(1000, 4), rep(972, 235)), std::invalid_argument);
    CHECK_THROWS_AS(klmn_factor(50, rep(7, 1), rep(5, 5)), std::invalid_argument);  // even N
}

TEST_CASE("fraction route") {
    CHECK(gcd_fraction_factor(1000009, rep(1000, 3), rep(972, 235)) == 293);
    // 1000^2 - 235^2 = 972^2 - 3^2, i.e. 1235 * 765 = 975 * 969, and 1235/975 = 19/15
    CHECK(1235 * 765 == 969 * 975);
    CHECK(reduce_fraction(1000 + 235, 972 + 3) == std::pair<Natural, Natural>{19, 15});
    CHECK(gcd(1000009, 19 * 19 + 15 * 15) == 293);
    CHECK(gcd_fraction_factor(169, rep(13, 0), rep(12, 5)) == 13);
    const Natural g = gcd_fraction_factor(325, rep(18, 1), rep(17, 6));
    CHECK(g == 25);
    CHECK_THROWS_AS(gcd_fraction_factor(325, rep(18, 1), rep(18, 1)), std::invalid_argument);
}

TEST_CASE("factor picks the two smallest representations") {
    const auto f = factor(1000009, {rep(1000, 3), rep(972, 235)});
    CHECK(f.f1 == 293);
    CHECK(f.f2 == 3413);
    CHECK(f.divisor == 293);

    const auto g = factor(169, {rep(13, 0), rep(12, 5)});
    CHECK(g.f1 == 13);
    CHECK(g.f2 == 13);

    // 1105 = 33^2+4^2 = 32^2+9^2 = 31^2+12^2 = 24^2+23^2; smallest two are (24,23), (31,12)
    const auto h = factor(1105, {rep(33, 4), rep(32, 9), rep(31, 12), rep(24, 23)});
    CHECK(h.f1 * h.f2 == 1105);
    CHECK(h.f1 == 13);
    CHECK(h.f2 == 85);
    CHECK(h.divisor == 13);

    CHECK_THROWS_AS(factor(29, {rep(5, 2)}), std::invalid_argument);
}

TEST_CASE("identities for every odd n up to 10^5 with two representations") {
    int checked = 0;
    for (Natural N = 1; N <= 100000; N += 2) {
        const auto reps = oracle_representations(N);
        if (reps.size() < 2) continue;
        ++checked;
        for (std::size_t i = 0; i + 1 < reps.size() && i < 3; ++i) {
            for (auto arrangement : {Arrangement::EvenOdd, Arrangement::Mixed}) {
                const auto w = klmn_factor(N, reps[i], reps[i + 1], arrangement);
                REQUIRE(static_cast<Wide>(w.k * w.k + w.n * w.n) * (w.l * w.l + w.m * w.m) == static_cast<Wide>(4) * N);
                REQUIRE(w.l * w.n == w.d + w.b);
                REQUIRE(w.f1 * w.f2 == N);
                REQUIRE(w.f1 > 1);
                REQUIRE(w.f2 < N);
            }
            const Natural g = gcd_fraction_factor(N, reps[i], reps[i + 1]);
            REQUIRE(N % g == 0);
            REQUIRE(g > 1);
            REQUIRE(g < N);
        }
        const auto f = factor(N, reps);
        REQUIRE(f.f1 * f.f2 == N);
    }
    CHECK(checked > 1000);
}
