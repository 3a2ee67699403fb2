#pragma once

#include <optional>

#include "kemeny/matrices.hpp"
#include "kemeny/qubo.hpp"

namespace kemeny {

/// Candidate-position (one-hot) encoding: n^2 variables c(i, pos), row and
/// column one-hot penalties with P = n^2 * |votes|, and rank costs paying
/// the disagreeing votes for every ordered placement. Feasible energies
/// equal the cumulative KT of the decoded ranking.
struct N2Encoding {
  int n = 0;
  double penalty = 0.0;
  Qubo qubo;

  int var(int candidate, int position) const { return candidate * n + position; }

  /// Recovers the ranking from a one-hot configuration; nullopt when any
  /// row or column constraint is violated.
  std::optional<Ranking> decode(std::span<const std::uint8_t> config) const;
};

/// Requires a complete unweighted dataset matrix (integral tallies).
N2Encoding build_n2_qubo(const PairMatrix& pm, int total_votes);

}  // namespace kemeny
