#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/matrices.hpp"

namespace kemeny {

/// Exhaustive optimum: the minimum cumulative KT and every ranking
/// attaining it.
struct OracleResult {
  double min_kt = 0.0;
  std::vector<Ranking> optima;  // lexicographically sorted
};

/// Enumerates all n! complete rankings. Throws too_large_error past the cap.
OracleResult brute_force(const Dataset& ds, int cap = 9);

/// Randomized pivot partition on the comparison matrix: element e goes
/// before pivot p iff w(e, p) > w(p, e), after iff the reverse, and ties
/// flip a seeded coin.
Ranking kwiksort(const PairMatrix& pm, std::uint64_t seed);

/// Every ranking kwiksort can output on this input, over all pivot choices
/// and both tie resolutions. Throws too_large_error past the cap.
std::vector<Ranking> kwiksort_reachable(const PairMatrix& pm, int cap = 8);

}  // namespace kemeny
