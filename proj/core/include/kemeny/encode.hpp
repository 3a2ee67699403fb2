#pragma once

#include <map>
#include <set>

#include "kemeny/cycles.hpp"
#include "kemeny/matrices.hpp"
#include "kemeny/qubo.hpp"

namespace kemeny {

/// Per-cycle penalty coefficients.
using PenaltyLedger = std::map<Cycle, double>;

/// Min-max penalty rule. odd: min(max|b|, total_weight - 2) + epsilon;
/// even: min(max|b|, total_weight) + epsilon.
double select_penalty(const BiasMatrix& b, double total_weight, Parity parity,
                      double epsilon);

/// The cycle-forbidding polynomial
///   c_ijk = x_ik + x_ij x_jk - x_ij x_ik - x_jk x_ik
/// equals 1 exactly on the two non-transitive patterns and 0 otherwise;
/// the mirrored all-zeros violation (x_ij = x_jk = 0, x_ik = 1) is already
/// covered, so no extra term is needed.
void add_cycle_penalty(Qubo& q, const Cycle& c, double penalty, int n);

/// Linear biases plus the penalty polynomial with uniform weight on every
/// triple. Variables are in pair_index order.
Qubo build_base_qubo(const BiasMatrix& b, double penalty);

/// Linear biases plus penalty polynomials only for ledgered cycles, each
/// with its own coefficient.
Qubo build_iterative_qubo(const BiasMatrix& b, const PenaltyLedger& ledger);

/// A QUBO over the non-removed pair variables, densely re-indexed.
struct ReducedQubo {
  Qubo qubo;
  int n = 0;
  std::set<CandidatePair> removed;
  std::vector<CandidatePair> var_pairs;  // reduced variable -> pair

  /// Expands a reduced configuration to full bits, with removed pairs left
  /// undecided.
  UpperTriBits expand(std::span<const std::uint8_t> config) const;
};

/// Drops removed pairs from the linear term. Ledgered cycles must not touch
/// removed pairs (their values would be lost); violations throw
/// std::invalid_argument.
ReducedQubo build_pair_removal_qubo(const BiasMatrix& b, const PenaltyLedger& ledger,
                                    const std::set<CandidatePair>& removed);

}  // namespace kemeny
