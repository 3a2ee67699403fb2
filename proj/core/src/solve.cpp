#include "kemeny/solve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "kemeny/distance.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

namespace {

// seed streams, disjoint by construction
constexpr std::uint64_t kStreamSelect = 1;
constexpr std::uint64_t kStreamBase = 2;
constexpr std::uint64_t kStreamBaseTie = 3;
std::uint64_t sampler_stream(int iteration, int run) {
  return 1000 + static_cast<std::uint64_t>(iteration) * 4096 + run;
}
std::uint64_t tie_stream(int iteration) {
  return 2'000'000 + static_cast<std::uint64_t>(iteration);
}

Parity parity_of(const Dataset& ds, const std::optional<Parity>& override) {
  if (override) return *override;
  const double tw = ds.total_weight();
  const double rounded = std::round(tw);
  if (std::abs(tw - rounded) < 1e-9) {
    return std::llround(rounded) % 2 != 0 ? Parity::odd : Parity::even;
  }
  return Parity::even;
}

double initial_penalty_of(const Cycle& c, const BiasMatrix& b, InitialPenalty mode,
                          Parity parity, double epsilon) {
  if (mode == InitialPenalty::minimal) {
    return (parity == Parity::odd ? 1.0 : 0.0) + epsilon;
  }
  const double mb = std::min({std::abs(b.at(c.i, c.j)), std::abs(b.at(c.i, c.k)),
                              std::abs(b.at(c.j, c.k))});
  return mb + epsilon;
}

// lowest energy, then highest num_occ, then lexicographically smallest bits
const SampleRecord& pick_best(const SampleSet& ss) { return ss.best(); }

bool record_less(const SampleRecord& a, const SampleRecord& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  if (a.num_occ != b.num_occ) return a.num_occ > b.num_occ;
  return a.config < b.config;
}

std::array<CandidatePair, 3> cycle_pairs(const Cycle& c) {
  return {CandidatePair{c.i, c.j}, CandidatePair{c.i, c.k}, CandidatePair{c.j, c.k}};
}

struct EngineConfig {
  std::optional<PrStrategy> strategy;
  int count = 0;
};

Solution run_engine(const Dataset& ds, Sampler& sampler, const IterOptions& opts,
                    const EngineConfig& engine) {
  ds.validate();
  if (opts.max_cycle_updates == 0) {
    throw std::invalid_argument("max_cycle_updates must be >= 1 when finite");
  }
  if (opts.double_check < 1) throw std::invalid_argument("double_check must be >= 1");

  const PairMatrix W = build_comparison(ds);
  const BiasMatrix B = bias_of(W);
  const OmegaMatrix Om = omega(B);
  const Parity parity = parity_of(ds, opts.parity);
  const InitialPenalty mode = opts.initial_penalty == InitialPenalty::automatic
                                  ? (ds.plain() ? InitialPenalty::minimal
                                                : InitialPenalty::bias_scaled)
                                  : opts.initial_penalty;
  const double increment = ds.plain() ? 2.0 : 1.0;

  PenaltyLedger ledger;
  {
    std::set<Cycle> seed_cycles = initial_cycles(Om, parity);
    if (opts.prune_k) seed_cycles = prune_for_embedding(seed_cycles, *opts.prune_k);
    for (const Cycle& c : seed_cycles) {
      ledger[c] = initial_penalty_of(c, B, mode, parity, opts.epsilon);
    }
  }

  std::set<CandidatePair> removed;
  if (engine.strategy && engine.count > 0) {
    removed = *engine.strategy == PrStrategy::prhb
                  ? remove_pairs_prhb(B, ledger, engine.count)
                  : remove_pairs_promega(Om, ledger, engine.count, opts.pr_min_gap,
                                         child_seed(opts.seed, kStreamSelect));
  }

  std::optional<Solution> best;
  std::vector<IterationTrace> trace;
  int restarts = 0;
  long cycle_updates = 0;
  int iterations_used = 0;

  auto make_solution = [&](const UpperTriBits& bits, const Ranking& rk, double kt,
                           const SampleRecord& rec, bool converged) {
    Solution s;
    s.ranking = rk;
    s.bits = bits;
    s.cumulative_kt = kt;
    s.normalized_kt = normalized_kt(ds, rk);
    s.energy = rec.energy;
    s.num_occ = rec.num_occ;
    s.ledger = ledger;
    s.converged = converged;
    s.seed = opts.seed;
    s.sampler = sampler.name();
    return s;
  };

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    iterations_used = iter;
    const ReducedQubo rq = build_pair_removal_qubo(B, ledger, removed);

    std::optional<SampleRecord> best_rec;
    std::optional<UpperTriBits> best_bits;
    std::vector<std::set<Cycle>> run_cycles;
    std::set<CandidatePair> stalled_pairs;
    for (int run = 0; run < opts.double_check; ++run) {
      const SampleSet ss =
          sampler.sample(rq.qubo, child_seed(opts.seed, sampler_stream(iter, run)));
      const SampleRecord& rec = pick_best(ss);
      const InferOutcome inferred = infer_removed(rq.expand(rec.config), removed);
      if (inferred.stalled()) {
        stalled_pairs.insert(inferred.unresolved.begin(), inferred.unresolved.end());
        continue;
      }
      run_cycles.push_back(detect_cycles(inferred.bits));
      if (!best_rec || record_less(rec, *best_rec)) {
        best_rec = rec;
        best_bits = inferred.bits;
      }
    }

    if (!best_rec) {
      // every run stalled; reintroduce the unresolved pairs and rerun
      if (++restarts > opts.pr_max_restarts) throw PairRemovalExhausted(best);
      for (const CandidatePair& p : stalled_pairs) removed.erase(p);
      continue;
    }

    const std::set<Cycle> best_cycles = detect_cycles(*best_bits);
    const Ranking rk = reconstruct(*best_bits, child_seed(opts.seed, tie_stream(iter)));
    const double kt = cumulative_kt(ds, rk);

    if (best_cycles.empty()) {
      Solution s = make_solution(*best_bits, rk, kt, *best_rec, true);
      trace.push_back(IterationTrace{iter, static_cast<long>(ledger.size()), 0, 0,
                                     best_rec->energy, kt});
      s.trace = std::move(trace);
      s.iterations = iterations_used;
      return s;
    }

    if (!best || kt < best->cumulative_kt) {
      best = make_solution(*best_bits, rk, kt, *best_rec, false);
    }

    std::set<Cycle> to_penalize = intersect_runs(run_cycles);
    std::set<CandidatePair> touched;
    for (const Cycle& c : to_penalize) {
      for (const CandidatePair& p : cycle_pairs(c)) {
        if (removed.count(p)) touched.insert(p);
      }
    }
    if (!touched.empty()) {
      // a cycle landed on an inferred pair; it must become a real variable
      // before it can be penalized
      if (++restarts > opts.pr_max_restarts) throw PairRemovalExhausted(best);
      for (const CandidatePair& p : touched) removed.erase(p);
    }

    int new_cycles = 0;
    int bumped = 0;
    for (const Cycle& c : to_penalize) {
      if (auto it = ledger.find(c); it != ledger.end()) {
        it->second += increment;
        ++bumped;
      } else {
        ledger[c] = initial_penalty_of(c, B, mode, parity, opts.epsilon);
        ++new_cycles;
      }
    }
    if (new_cycles + bumped > 0) ++cycle_updates;
    trace.push_back(IterationTrace{iter, static_cast<long>(ledger.size()), new_cycles,
                                   bumped, best_rec->energy, kt});
    if (opts.max_cycle_updates >= 0 && cycle_updates >= opts.max_cycle_updates) break;
  }

  if (!best) throw PairRemovalExhausted(std::nullopt);
  best->trace = std::move(trace);
  best->iterations = iterations_used;
  best->ledger = ledger;  // final ledger snapshot
  return *best;
}

}  // namespace

Solution solve_base(const Dataset& ds, Sampler& sampler, double epsilon,
                    std::optional<Parity> parity_override, std::uint64_t seed) {
  ds.validate();
  const PairMatrix W = build_comparison(ds);
  const BiasMatrix B = bias_of(W);
  const Parity parity = parity_of(ds, parity_override);
  const double P = select_penalty(B, ds.total_weight(), parity, epsilon);
  const Qubo q = build_base_qubo(B, P);
  const SampleSet ss = sampler.sample(q, child_seed(seed, kStreamBase));
  const SampleRecord& rec = pick_best(ss);

  UpperTriBits bits(ds.n);
  for (int v = 0; v < q.num_vars; ++v) bits.bits[v] = rec.config[v] ? 1 : 0;
  const Ranking rk = reconstruct(bits, child_seed(seed, kStreamBaseTie));

  Solution s;
  s.ranking = rk;
  s.bits = bits;
  s.cumulative_kt = cumulative_kt(ds, rk);
  s.normalized_kt = normalized_kt(ds, rk);
  s.energy = rec.energy;
  s.num_occ = rec.num_occ;
  s.iterations = 1;
  for (int i = 0; i < ds.n; ++i) {
    for (int j = i + 1; j < ds.n; ++j) {
      for (int k = j + 1; k < ds.n; ++k) s.ledger[Cycle{i, j, k}] = P;
    }
  }
  s.converged = detect_cycles(bits).empty();
  s.seed = seed;
  s.sampler = sampler.name();
  return s;
}

Solution solve_iterative(const Dataset& ds, Sampler& sampler, const IterOptions& opts) {
  return run_engine(ds, sampler, opts, EngineConfig{});
}

Solution solve_pair_removal(const Dataset& ds, Sampler& sampler, PrStrategy strategy,
                            int count, const IterOptions& opts) {
  if (count < 0) throw std::invalid_argument("pair-removal count must be >= 0");
  return run_engine(ds, sampler, opts, EngineConfig{strategy, count});
}

std::set<CandidatePair> remove_pairs_prhb(const BiasMatrix& b, const PenaltyLedger& ledger,
                                          int count) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<CandidatePair> eligible;
  for (int i = 0; i < b.n; ++i) {
    for (int j = i + 1; j < b.n; ++j) {
      const CandidatePair p{i, j};
      bool in_cycle = false;
      for (const auto& [cycle, penalty] : ledger) {
        if (cycle.contains_pair(p)) {
          in_cycle = true;
          break;
        }
      }
      if (!in_cycle) eligible.push_back(p);
    }
  }
  std::stable_sort(eligible.begin(), eligible.end(),
                   [&b](const CandidatePair& x, const CandidatePair& y) {
                     return std::abs(b.at(x.first, x.second)) >
                            std::abs(b.at(y.first, y.second));
                   });
  std::set<CandidatePair> out;
  for (const CandidatePair& p : eligible) {
    if (static_cast<int>(out.size()) >= count) break;
    out.insert(p);
  }
  return out;
}

std::set<CandidatePair> remove_pairs_promega(const OmegaMatrix& om, const PenaltyLedger& ledger,
                                             int count, int min_gap, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  if (min_gap < 2) throw std::invalid_argument("min_gap must be >= 2");

  // the majority matrix as bits, 0.5 entries broken by a seeded coin
  UpperTriBits approx(om.n);
  Rng rng(seed);
  for (int i = 0; i < om.n; ++i) {
    for (int j = i + 1; j < om.n; ++j) {
      const double w = om.at(i, j);
      approx.set(i, j, w == 1.0 ? 1 : (w == 0.0 ? 0 : (rng.coin() ? 1 : 0)));
    }
  }
  const Ranking approx_rank = reconstruct(approx, child_seed(seed, 1));
  std::vector<int> pos(om.n);
  for (int p = 0; p < om.n; ++p) pos[approx_rank.order[p]] = p;

  struct Gapped {
    CandidatePair pair;
    int gap;
  };
  std::vector<Gapped> eligible;
  for (int i = 0; i < om.n; ++i) {
    for (int j = i + 1; j < om.n; ++j) {
      const CandidatePair p{i, j};
      bool in_cycle = false;
      for (const auto& [cycle, penalty] : ledger) {
        if (cycle.contains_pair(p)) {
          in_cycle = true;
          break;
        }
      }
      if (in_cycle) continue;
      const int gap = std::abs(pos[i] - pos[j]);
      if (gap >= min_gap) eligible.push_back({p, gap});
    }
  }
  std::stable_sort(eligible.begin(), eligible.end(),
                   [](const Gapped& a, const Gapped& b) { return a.gap > b.gap; });

  const int per_candidate_cap = (om.n + 1) / 2;
  std::vector<int> touches(om.n, 0);
  std::set<CandidatePair> out;
  for (const Gapped& g : eligible) {
    if (static_cast<int>(out.size()) >= count) break;
    if (touches[g.pair.first] >= per_candidate_cap ||
        touches[g.pair.second] >= per_candidate_cap) {
      continue;
    }
    out.insert(g.pair);
    ++touches[g.pair.first];
    ++touches[g.pair.second];
  }
  return out;
}

InferOutcome infer_removed(const UpperTriBits& x, const std::set<CandidatePair>& removed) {
  for (int i = 0; i < x.n; ++i) {
    for (int j = i + 1; j < x.n; ++j) {
      const bool undecided = x.get(i, j) == UpperTriBits::kUndecided;
      if (undecided != static_cast<bool>(removed.count({i, j}))) {
        throw std::invalid_argument("undecided slots must match the removed set exactly");
      }
    }
  }

  InferOutcome out;
  out.bits = x;
  std::vector<CandidatePair> pending(removed.begin(), removed.end());

  // logical value of "a preferred to c" from the stored upper triangle
  auto logical = [&out](int a, int c) -> int {
    const std::int8_t v = a < c ? out.bits.get(a, c) : out.bits.get(c, a);
    if (v == UpperTriBits::kUndecided) return UpperTriBits::kUndecided;
    return a < c ? v : 1 - v;
  };

  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<CandidatePair> still;
    for (const CandidatePair& p : pending) {
      const int a = p.first;
      const int b = p.second;
      long votes = 0;
      for (int c = 0; c < out.bits.n; ++c) {
        if (c == a || c == b) continue;
        const int u = logical(a, c);
        const int v = logical(b, c);
        if (u == UpperTriBits::kUndecided || v == UpperTriBits::kUndecided) continue;
        if (u == 1 && v == 0) ++votes;       // a above c above b
        else if (u == 0 && v == 1) --votes;  // b above c above a
      }
      if (votes > 0) {
        out.bits.set(a, b, 1);
        progress = true;
      } else if (votes < 0) {
        out.bits.set(a, b, 0);
        progress = true;
      } else {
        still.push_back(p);  // majority draw; try again next sweep
      }
    }
    pending = std::move(still);
  }
  out.unresolved = std::move(pending);
  return out;
}

}  // namespace kemeny
