#include "doctest.h"

#include "hyperlag/bounds.hpp"
#include "oracles.hpp"

using namespace hyperlag;
using namespace hyperlag::lab;

namespace {

long long ipow(long long b, int e) {
    long long out = 1;
    while (e-- > 0) out *= b;
    return out;
}

long long oracle_coeff_clique_free(int r) {
    return (2LL * r - 6) * ipow(2, r - 1) + ipow(2, r - 3) + (r - 4LL) * (2LL * r - 7) - 1;
}

long long c(int n, int k) { return static_cast<long long>(oracle::pascal(n, k)); }

}  // namespace

TEST_CASE("coefficients at r = 4 and r = 5") {
    CHECK(coeff_clique_free(4) == 17);
    CHECK(coeff_clique_free(5) == 70);
    CHECK(coeff_with_clique(4) == 1);
    CHECK(coeff_with_clique(5) == 3);
    for (int r = 4; r <= 20; ++r) {
        CHECK(coeff_clique_free(r) == oracle_coeff_clique_free(r));
        CHECK(coeff_with_clique(r) == ipow(2, r - 3) - 1);
    }
}

TEST_CASE("bound summaries agree with direct binomial arithmetic") {
    for (int r = 4; r <= 6; ++r) {
        for (int t = r + 1; t <= 60; ++t) {
            const BoundSummary b = theorem_bounds(r, t);
            const long long end = c(t - 1, r) + c(t - 2, r - 1);
            const long long pair = c(t - 2, r - 2) - 1;
            CHECK(b.lower == c(t - 1, r));
            CHECK(b.plateau_end() == end);
            CHECK(b.upper_with_clique == end - (ipow(2, r - 3) - 1) * pair);
            CHECK(b.upper_clique_free == end - oracle_coeff_clique_free(r) * pair);
            CHECK(b.nonempty_clique_free == (end - oracle_coeff_clique_free(r) * pair >= c(t - 1, r)));
            CHECK(b.upper_clique_free <= b.upper_with_clique);
            CHECK(b.upper_with_clique <= b.plateau_end());
        }
    }
}

TEST_CASE("first nonempty clique-free range at r = 4") {
    CHECK(first_nonempty_t(4, 100) == 55);
    CHECK_FALSE(first_nonempty_t(4, 54).has_value());
    const BoundSummary b = theorem_bounds(4, 55);
    CHECK(b.lower == 316251);
    CHECK(b.upper_clique_free == 316268);
    CHECK(b.width_clique_free() == 17);
    CHECK_FALSE(theorem_bounds(4, 54).nonempty_clique_free);
}

TEST_CASE("bound preconditions") {
    CHECK_THROWS_AS((void)theorem_bounds(3, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)theorem_bounds(4, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)check_power_inequality(3, 5, 10), std::invalid_argument);
}

TEST_CASE("power inequality over a small window, checked in long double as well") {
    const PowerInequalityReport rep = check_power_inequality(4, 8, 300);
    CHECK(rep.counterexamples.empty());
    std::uint64_t pairs = 0;
    for (int r = 4; r <= 8; ++r) {
        pairs += 300 - r + 1;
        for (int t = r; t <= 300; ++t) {
            const long double lhs = std::pow(static_cast<long double>(t - r), r - 2) * (t - 1);
            const long double rhs = std::pow(static_cast<long double>(t - r + 1), r - 1);
            CHECK(lhs <= rhs);
        }
    }
    CHECK(rep.pairs_checked == pairs);
}
