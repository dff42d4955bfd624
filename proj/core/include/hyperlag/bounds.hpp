#pragma once

#include <optional>
#include <vector>

#include "hyperlag/exact.hpp"

namespace hyperlag::lab {

/// Edge-count ranges for r-graphs on t vertices, in exact integers.
///
/// Both upper ends have the shape C(t-1, r) + C(t-2, r-1) - c (C(t-2, r-2) - 1)
/// with c = coeff_with_clique = 2^{r-3} - 1 for the clique-containing statement and
/// c = coeff_clique_free = (2r-6) 2^{r-1} + 2^{r-3} + (r-4)(2r-7) - 1 for the
/// clique-free one.
struct BoundSummary {
    int r = 0;
    int t = 0;
    BigInt lower;
    BigInt upper_with_clique;
    BigInt upper_clique_free;
    BigInt coeff_with_clique;
    BigInt coeff_clique_free;
    bool nonempty_clique_free = false;

    /// upper_clique_free - lower; negative when the range is empty.
    BigInt width_clique_free() const { return upper_clique_free - lower; }
    /// C(t-1, r) + C(t-2, r-1).
    BigInt plateau_end() const;
};

/// Requires r >= 4 and t >= r + 1; otherwise std::invalid_argument.
BoundSummary theorem_bounds(int r, int t);

BigInt coeff_with_clique(int r);
BigInt coeff_clique_free(int r);

/// Smallest t in [r+1, t_max] whose clique-free range is nonempty.
std::optional<int> first_nonempty_t(int r, int t_max);

struct PowerInequalityReport {
    int r_min = 0;
    int r_max = 0;
    int t_max = 0;
    unsigned long long pairs_checked = 0;
    /// (r, t) pairs where (t-r)^{r-2}(t-1) < (t-r+1)^{r-1} fails.
    std::vector<std::pair<int, int>> counterexamples;
};

/// Checks (t-r)^{r-2}(t-1) < (t-r+1)^{r-1} exactly for r_min <= r <= r_max,
/// r <= t <= t_max. Requires r_min >= 4.
PowerInequalityReport check_power_inequality(int r_min, int r_max, int t_max);

}  // namespace hyperlag::lab
