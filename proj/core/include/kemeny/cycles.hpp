#pragma once

#include <compare>
#include <set>
#include <vector>

#include "kemeny/matrices.hpp"

namespace kemeny {

/// A transitivity-violating candidate triple, stored with i < j < k.
struct Cycle {
  int i = 0;
  int j = 0;
  int k = 0;

  auto operator<=>(const Cycle&) const = default;
  bool contains_pair(const CandidatePair& p) const {
    return (p == CandidatePair{i, j}) || (p == CandidatePair{i, k}) ||
           (p == CandidatePair{j, k});
  }
};

enum class Parity { odd, even };

/// Majority-preference matrix: omega(i, j) = Theta(-b(i, j)) with
/// Theta(0) = 1/2, so entries are exactly 0, 0.5 or 1.
struct OmegaMatrix {
  int n = 0;
  std::vector<double> omega;  // pair_index order

  OmegaMatrix() = default;
  explicit OmegaMatrix(int n_) : n(n_), omega(num_pairs(n_), 0.5) {}

  double at(int i, int j) const { return omega[pair_index(i, j, n)]; }
  double& at(int i, int j) { return omega[pair_index(i, j, n)]; }
};

OmegaMatrix omega(const BiasMatrix& b);

/// Triples flagged as potential cycles by the majority matrix. The odd rule
/// requires definite entries ((0,1,0) or (1,0,1) on (ij, ik, jk)); the even
/// rule relaxes each equality to "differs from", which also catches 0.5
/// entries. even-rule results always contain the odd-rule results.
std::set<Cycle> initial_cycles(const OmegaMatrix& om, Parity parity);

/// All triples i<j<k violating transitivity: x_ij = x_jk = 1 with x_ik = 0,
/// or the mirrored x_ij = x_jk = 0 with x_ik = 1. Empty iff x represents a
/// ranking. Throws std::logic_error on undecided slots.
std::set<Cycle> detect_cycles(const UpperTriBits& x);

/// Drops a cycle when each of its three pairs is still covered by at least
/// k other retained cycles; scans in lexicographic order and repeats until
/// a full pass removes nothing.
std::set<Cycle> prune_for_embedding(const std::set<Cycle>& cycles, int k);

/// Intersection of cycle sets from repeated runs; keeps only cycles that
/// appear in every run. Throws std::invalid_argument on an empty list.
std::set<Cycle> intersect_runs(const std::vector<std::set<Cycle>>& sets);

}  // namespace kemeny
