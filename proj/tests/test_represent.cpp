#include "doctest.h"
#include "oracles.hpp"
#include <set>

#include "twosq/represent.hpp"

using namespace twosq;

namespace {

using Reps = std::vector<Representation>;

std::set<std::pair<Natural, Natural>> as_pairs(const Reps& reps) {
    std::set<std::pair<Natural, Natural>> s;
    for (const auto& r : reps) s.insert({r.a, r.b});
    return s;
}

}  // namespace

TEST_CASE("representations of the worked numbers") {
    CHECK(representations(1000009) == Reps{{1000, 3, true}, {972, 235, true}});
    CHECK(representations(1000081) == Reps{{1000, 9, true}});
    CHECK(representations(21).empty());
    CHECK(representations(81) == Reps{{9, 0, false}});
}

TEST_CASE("representations rejects ineligible input") {
    CHECK_THROWS_AS(representations(39), std::invalid_argument);
    CHECK_THROWS_AS(representations(25), std::invalid_argument);
}

TEST_CASE("oracle examples") {
    CHECK(oracle_representations(1000009) == Reps{{1000, 3, true}, {972, 235, true}});
    CHECK(oracle_representations(25) == Reps{{5, 0, false}, {4, 3, true}});
    CHECK(oracle_representations(29) == Reps{{5, 2, true}});
    CHECK(oracle_representations(0) == Reps{{0, 0, false}});
    CHECK(oracle_representations(3).empty());
}

TEST_CASE("oracle agrees with an independent two-pointer count") {
    for (Natural n = 0; n <= 20000; ++n) REQUIRE(as_pairs(oracle_representations(n)) == oracle::two_square_pairs(n));
}

TEST_CASE("scan equals oracle for every eligible n up to 10^5") {
    for (Natural n = 9; n <= 100000; ++n) {
        if (!oracle::eligible(n)) continue;
        const auto reps = representations(n);
        REQUIRE(reps == oracle_representations(n));
        for (const auto& r : reps) {
            REQUIRE(r.a >= r.b);
            REQUIRE(r.a * r.a + r.b * r.b == n);
            REQUIRE(((r.a % 5 == 0) != (r.b % 5 == 0)));
            REQUIRE(r.coprime == (gcd(r.a, r.b) == 1));
        }
    }
}

TEST_CASE("canonical order is descending and deterministic") {
    const auto reps = representations(262769);  // 13 * 17 * 29 * 41, eight representations
    REQUIRE(reps.size() == 8);
    for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].a > reps[i].a);
    CHECK(representations(262769) == reps);
}

TEST_CASE("large eligible inputs") {
    // 10^18 + 9 = (10^9)^2 + 3^2
    const Natural n = 1'000'000'000'000'000'009;
    REQUIRE(classify(n).eligible());
    const auto reps = oracle_representations(1'000'000'009);
    CHECK(reps == representations(1'000'000'009));
    AnalyzeOptions opts;
    const auto a = analyze(n, opts);
    bool found = false;
    for (const auto& r : a.representations) found |= (r.a == 1'000'000'000 && r.b == 3);
    CHECK(found);
}
