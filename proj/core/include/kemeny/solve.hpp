#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kemeny/encode.hpp"
#include "kemeny/samplers.hpp"

namespace kemeny {

struct IterationTrace {
  int iteration = 0;
  long ledger_size = 0;
  int new_cycles = 0;
  int bumped_cycles = 0;
  double best_energy = 0.0;
  double best_kt = 0.0;
};

enum class InitialPenalty { automatic, minimal, bias_scaled };

struct IterOptions {
  /// Stop after this many iterations that changed the ledger; < 0 means
  /// unbounded (run to convergence). The comparison harness uses 4.
  long max_cycle_updates = -1;
  /// Hard cap on sampling rounds, so a wandering stochastic sampler cannot
  /// spin forever. Non-convergence is reported, not thrown.
  int max_iterations = 1000;
  std::optional<Parity> parity;  // default: parity of the total vote weight
  InitialPenalty initial_penalty = InitialPenalty::automatic;
  int double_check = 1;  // sampler runs per iteration; cycle sets intersect
  std::optional<int> prune_k;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  int pr_min_gap = 2;      // pair removal: minimum position gap for PR-omega
  int pr_max_restarts = 3; // pair removal: bounded stall/cycle restarts
};

struct Solution {
  Ranking ranking;
  UpperTriBits bits;
  double cumulative_kt = 0.0;
  double normalized_kt = 0.0;
  double energy = 0.0;
  long num_occ = 0;
  int iterations = 0;
  PenaltyLedger ledger;
  bool converged = false;
  std::uint64_t seed = 0;
  std::string sampler;
  std::vector<IterationTrace> trace;
};

/// Pair removal ran out of restarts before every removed pair could be
/// reconstructed. Carries the best attempt seen so far, if any.
class PairRemovalExhausted : public std::runtime_error {
 public:
  explicit PairRemovalExhausted(std::optional<Solution> best)
      : std::runtime_error("pair removal: restart budget exhausted"),
        best_attempt(std::move(best)) {}

  std::optional<Solution> best_attempt;
};

/// One-shot pipeline: uniform penalty on every triple, single sample, score
/// reconstruction. converged reflects the cycle check on the best record.
/// The classical work around the sampler (tallying, scoring, sorting) runs
/// in O(|votes| * n^2).
Solution solve_base(const Dataset& ds, Sampler& sampler, double epsilon = 0.5,
                    std::optional<Parity> parity = {}, std::uint64_t seed = 0);

/// Iterative pipeline: ledger seeded from the majority-matrix cycles at the
/// minimal (or bias-scaled) penalty, then loop sample -> detect cycles in
/// the best configuration -> enter new cycles at the minimal penalty and
/// bump recurring ones, until a cycle-free output or the update budget runs
/// out. On non-convergence the best-by-KT iteration is returned with
/// converged = false.
Solution solve_iterative(const Dataset& ds, Sampler& sampler, const IterOptions& opts = {});

/// The `count` pairs of largest |bias| not belonging to any ledgered cycle;
/// ties lexicographic. May return fewer when candidates run out.
std::set<CandidatePair> remove_pairs_prhb(const BiasMatrix& b, const PenaltyLedger& ledger,
                                          int count);

/// Reconstructs a ranking from the majority matrix (0.5 slots broken by a
/// seeded coin) and returns up to `count` non-cycle pairs at position gap
/// >= min_gap, largest gaps first, touching any one candidate at most
/// ceil(n/2) times.
std::set<CandidatePair> remove_pairs_promega(const OmegaMatrix& om, const PenaltyLedger& ledger,
                                             int count, int min_gap, std::uint64_t seed);

struct InferOutcome {
  UpperTriBits bits;
  std::vector<CandidatePair> unresolved;  // nonempty = stall

  bool stalled() const { return !unresolved.empty(); }
};

/// Resolves undecided slots by transitive majority vote: for removed (a, b)
/// each third candidate c with both (a,c) and (b,c) decided contributes
/// R_c in {-1, 0, +1}; the slot becomes Theta(sum R_c) with Theta(0)
/// leaving it undecided. Sweeps feed resolved pairs back in until all are
/// decided or a full sweep makes no progress (stall). Decided bits are
/// never changed.
InferOutcome infer_removed(const UpperTriBits& x, const std::set<CandidatePair>& removed);

enum class PrStrategy { prhb, promega };

/// Pair-removal pipeline: selection, reduced QUBO, sampling, inference.
/// Stalls (and cycles that land on removed pairs) reintroduce the affected
/// pairs and rerun, bounded by opts.pr_max_restarts; exhaustion throws
/// PairRemovalExhausted. With count = 0 this is exactly solve_iterative.
Solution solve_pair_removal(const Dataset& ds, Sampler& sampler, PrStrategy strategy,
                            int count, const IterOptions& opts = {});

}  // namespace kemeny
