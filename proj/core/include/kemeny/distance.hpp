#pragma once

#include "kemeny/ranking.hpp"

namespace kemeny {

/// Kendall-Tau distance between two complete rankings over the same
/// candidates: the number of pairs ordered differently.
/// Throws std::invalid_argument on mismatched sizes or non-complete input.
long kendall_tau(const Ranking& r1, const Ranking& r2);

/// Sum of (generalized) KT distances from r to every vote in the dataset.
/// Reduces to plain integer-valued KT sums for complete unit-weight votes
/// under the uniform scheme.
double cumulative_kt(const Dataset& ds, const Ranking& r);

/// cumulative_kt divided by (total vote weight * n(n-1)/2); in [0, 1] for
/// plain datasets.
double normalized_kt(const Dataset& ds, const Ranking& r);

/// Generalized Kendall-Tau against a complete ranking r with an explicit
/// pair-weight scheme. Pair contributions are beta_k * alpha(i, j); partial
/// votes contribute only when both candidates are present; k-top votes also
/// contribute when exactly one is present (the present candidate preferred).
double generalized_kt(const Dataset& ds, const Ranking& r, const WeightScheme& ws);

}  // namespace kemeny
