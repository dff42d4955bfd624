#include "hyperlag/bounds.hpp"

#include <stdexcept>

namespace hyperlag::lab {

BigInt coeff_with_clique(int r) {
    return big_pow(2, static_cast<unsigned>(r - 3)) - 1;
}

BigInt coeff_clique_free(int r) {
    return BigInt(2 * r - 6) * big_pow(2, static_cast<unsigned>(r - 1)) + big_pow(2, static_cast<unsigned>(r - 3)) +
           BigInt(r - 4) * (2 * r - 7) - 1;
}

BigInt BoundSummary::plateau_end() const {
    return big_binomial(t - 1, r) + big_binomial(t - 2, r - 1);
}

BoundSummary theorem_bounds(int r, int t) {
    if (r < 4) throw std::invalid_argument("theorem_bounds: requires r >= 4");
    if (t < r + 1) throw std::invalid_argument("theorem_bounds: requires t >= r + 1");
    BoundSummary b;
    b.r = r;
    b.t = t;
    b.lower = big_binomial(t - 1, r);
    b.coeff_with_clique = coeff_with_clique(r);
    b.coeff_clique_free = coeff_clique_free(r);
    const BigInt end = b.plateau_end();
    const BigInt pair_term = big_binomial(t - 2, r - 2) - 1;
    b.upper_with_clique = end - b.coeff_with_clique * pair_term;
    b.upper_clique_free = end - b.coeff_clique_free * pair_term;
    b.nonempty_clique_free = b.upper_clique_free >= b.lower;
    return b;
}

std::optional<int> first_nonempty_t(int r, int t_max) {
    for (int t = r + 1; t <= t_max; ++t) {
        if (theorem_bounds(r, t).nonempty_clique_free) return t;
    }
    return std::nullopt;
}

PowerInequalityReport check_power_inequality(int r_min, int r_max, int t_max) {
    if (r_min < 4) throw std::invalid_argument("check_power_inequality: requires r_min >= 4");
    PowerInequalityReport rep;
    rep.r_min = r_min;
    rep.r_max = r_max;
    rep.t_max = t_max;
    for (int r = r_min; r <= r_max; ++r) {
        for (int t = r; t <= t_max; ++t) {
            const BigInt lhs = big_pow(BigInt(t - r), static_cast<unsigned>(r - 2)) * (t - 1);
            const BigInt rhs = big_pow(BigInt(t - r + 1), static_cast<unsigned>(r - 1));
            ++rep.pairs_checked;
            if (!(lhs < rhs)) rep.counterexamples.emplace_back(r, t);
        }
    }
    return rep;
}

}  // namespace hyperlag::lab
