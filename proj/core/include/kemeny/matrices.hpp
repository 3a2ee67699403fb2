#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/pairs.hpp"
#include "kemeny/ranking.hpp"

namespace kemeny {

/// Pairwise comparison tallies: w(i, j) = total (weighted) count of votes
/// preferring candidate i to candidate j. Zero diagonal.
struct PairMatrix {
  int n = 0;
  std::vector<double> w;  // row-major n*n

  PairMatrix() = default;
  explicit PairMatrix(int n_) : n(n_), w(static_cast<std::size_t>(n_) * n_, 0.0) {}

  double& at(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
};

/// Strictly-upper-triangular biases b(i, j) = w(j, i) - w(i, j) for i < j.
struct BiasMatrix {
  int n = 0;
  std::vector<double> b;  // pair_index order

  BiasMatrix() = default;
  explicit BiasMatrix(int n_) : n(n_), b(num_pairs(n_), 0.0) {}

  double at(int i, int j) const { return b[pair_index(i, j, n)]; }
  double& at(int i, int j) { return b[pair_index(i, j, n)]; }
  double max_abs() const;
};

/// Strictly-upper-triangular binary pair assignment. bit(i, j) = 1 means
/// candidate i is preferred to candidate j. Slots may be undecided only
/// while pair-removal reconstruction is in flight.
struct UpperTriBits {
  static constexpr std::int8_t kUndecided = -1;

  int n = 0;
  std::vector<std::int8_t> bits;  // pair_index order; 0, 1 or kUndecided

  UpperTriBits() = default;
  explicit UpperTriBits(int n_) : n(n_), bits(num_pairs(n_), 0) {}

  std::int8_t get(int i, int j) const { return bits[pair_index(i, j, n)]; }
  void set(int i, int j, std::int8_t v) { bits[pair_index(i, j, n)] = v; }
  bool fully_decided() const;

  friend bool operator==(const UpperTriBits&, const UpperTriBits&) = default;
};

/// Builds the comparison matrix with the partial/k-top presence rules and
/// beta/alpha weighting.
PairMatrix build_comparison(const Dataset& ds);

BiasMatrix bias_of(const PairMatrix& pm);

/// Binary representation of a complete ranking: bit(i, j) = 1 iff i
/// precedes j. Always acyclic.
UpperTriBits represent(const Ranking& r);

/// Candidate scores V_i = sum_{j>i} x_ij + sum_{k<i} (1 - x_ki), i.e. the
/// number of candidates i is preferred over.
std::vector<int> candidate_scores(const UpperTriBits& x);

/// Sorts candidates by decreasing score. Ties are broken by a seeded
/// Fisher-Yates shuffle applied before the stable sort, so equal-score
/// candidates land in a reproducible random order.
/// Throws std::logic_error if any slot is undecided.
Ranking reconstruct(const UpperTriBits& x, std::uint64_t tie_seed);

/// 1 iff x exactly matches the binary representation of some optimum.
int accuracy(const UpperTriBits& x, const std::vector<Ranking>& optima);

}  // namespace kemeny
