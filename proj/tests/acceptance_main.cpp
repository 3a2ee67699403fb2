// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is self-contained and uses only local computation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kemeny/baselines.hpp"
#include "kemeny/datagen.hpp"
#include "kemeny/distance.hpp"
#include "kemeny/encode.hpp"
#include "kemeny/n2.hpp"
#include "kemeny/rng.hpp"
#include "kemeny/serialize.hpp"
#include "kemeny/solve.hpp"
#include "oracles.hpp"

using namespace kemeny;

namespace {

class check_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

Dataset synthetic(int n, int votes, std::uint64_t seed, ListKind kind = ListKind::complete,
                  int min_len = 2) {
  GenSpec spec;
  spec.n = n;
  spec.votes = votes;
  spec.seed = seed;
  spec.kind = kind;
  spec.min_len = min_len;
  return gen_synthetic(spec);
}

// ---------------------------------------------------------------------------
// 1. exact-sampler iterative solves match brute force on 50 seeded datasets

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  ExactSampler exact;
  for (int i = 0; i < 50; ++i) {
    const int n = 4 + i % 4;
    const Dataset ds = synthetic(n, 11, 9000 + i);
    IterOptions opts;
    opts.seed = 100 + i;
    const Solution s = solve_iterative(ds, exact, opts);
    require(s.converged, "run " + std::to_string(i) + " did not converge");
    const OracleResult oracle_res = brute_force(ds);
    require(s.cumulative_kt == oracle_res.min_kt,
            "run " + std::to_string(i) + ": kt " + std::to_string(s.cumulative_kt) +
                " != optimum " + std::to_string(oracle_res.min_kt));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 120.0, "exceeded the 2-minute budget: " + std::to_string(secs) + "s");
}

// ---------------------------------------------------------------------------
// 2. energy identity: qubo energy + sum(w) equals cumulative KT, exactly

void criterion_2() {
  Rng rng(2024);
  for (int d = 0; d < 20; ++d) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const Dataset ds = synthetic(n, 1 + 2 * static_cast<int>(rng.below(6)), 500 + d);
    const PairMatrix pm = build_comparison(ds);
    const BiasMatrix b = bias_of(pm);
    const Qubo q = build_iterative_qubo(b, {});
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) wsum += pm.at(i, j);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const Ranking r = complete_ranking(perm);
      const UpperTriBits x = represent(r);
      const std::vector<std::uint8_t> cfg(x.bits.begin(), x.bits.end());
      require(q.energy(cfg) + wsum == cumulative_kt(ds, r), "identity violated");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

// ---------------------------------------------------------------------------
// 3. the penalty polynomial is exactly the cycle indicator on all 8 patterns

void criterion_3() {
  for (int mask = 0; mask < 8; ++mask) {
    const int x01 = mask & 1;
    const int x02 = (mask >> 1) & 1;
    const int x12 = (mask >> 2) & 1;
    Qubo q;
    q.num_vars = 3;
    add_cycle_penalty(q, Cycle{0, 1, 2}, 1.0, 3);
    const std::vector<std::uint8_t> cfg = {static_cast<std::uint8_t>(x01),
                                           static_cast<std::uint8_t>(x02),
                                           static_cast<std::uint8_t>(x12)};
    const double value = q.energy(cfg);
    const bool cyclic =
        (x01 == 1 && x12 == 1 && x02 == 0) || (x01 == 0 && x12 == 0 && x02 == 1);
    require(value == (cyclic ? 1.0 : 0.0),
            "pattern " + std::to_string(mask) + " evaluated to " + std::to_string(value));
  }
}

// ---------------------------------------------------------------------------
// 4. penalty bound: P = (|votes|-2)+0.5 yields acyclic optima on all
//    3-candidate multiset datasets with 3, 5 and 7 votes

void criterion_4() {
  static const std::vector<std::vector<int>> kOrders = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  long datasets = 0;
  for (int total : {3, 5, 7}) {
    std::vector<int> counts(6, 0);
    std::function<void(int, int)> enumerate = [&](int slot, int left) {
      if (slot == 5) {
        counts[5] = left;
        ++datasets;
        std::vector<std::vector<int>> orders;
        for (int o = 0; o < 6; ++o) {
          for (int c = 0; c < counts[o]; ++c) orders.push_back(kOrders[o]);
        }
        const Dataset ds = make_dataset(3, orders);
        const BiasMatrix b = bias_of(build_comparison(ds));
        const double penalty = (total - 2) + 0.5;
        const SampleSet ss = exact_solve(build_base_qubo(b, penalty));
        const OracleResult opt = brute_force(ds);
        for (const SampleRecord& rec : ss.records) {
          UpperTriBits bits(3);
          for (int v = 0; v < 3; ++v) bits.bits[v] = rec.config[v] ? 1 : 0;
          require(detect_cycles(bits).empty(), "cyclic ground state");
          const Ranking r = reconstruct(bits, 1);
          require(cumulative_kt(ds, r) == opt.min_kt, "suboptimal ground state");
        }
        return;
      }
      for (int c = 0; c <= left; ++c) {
        counts[slot] = c;
        enumerate(slot + 1, left - c);
      }
    };
    enumerate(0, total);
  }
  require(datasets == 56 + 252 + 792,
          "expected 1100 multisets, saw " + std::to_string(datasets));
}

// ---------------------------------------------------------------------------
// 5. the embedded fixture defeats exhaustive and randomized pivot search

void criterion_5() {
  const Dataset ds = appendix_e_dataset();
  const OracleResult opt = brute_force(ds);
  const PairMatrix pm = build_comparison(ds);

  double best_reachable = -1.0;
  for (const Ranking& r : kwiksort_reachable(pm)) {
    const double kt = cumulative_kt(ds, r);
    if (best_reachable < 0.0 || kt < best_reachable) best_reachable = kt;
  }
  require(best_reachable > opt.min_kt, "exhaustive pivot exploration reached the optimum");

  double best_trial = -1.0;
  for (int t = 0; t < 10000; ++t) {
    const double kt = cumulative_kt(ds, kwiksort(pm, child_seed(4242, t)));
    if (best_trial < 0.0 || kt < best_trial) best_trial = kt;
  }
  require(best_trial > opt.min_kt, "a randomized trial reached the optimum");
  require(best_trial >= best_reachable, "trials beat the reachable set");
}

// ---------------------------------------------------------------------------
// 6. pair removal keeps the exact result; inference resolves or restarts

void criterion_6() {
  ExactSampler exact;
  for (int i = 0; i < 30; ++i) {
    const int n = 5 + i % 3;
    const Dataset ds = synthetic(n, 11, 7200 + i);
    IterOptions opts;
    opts.seed = 300 + i;
    const Solution plain = solve_iterative(ds, exact, opts);
    for (const PrStrategy strategy : {PrStrategy::prhb, PrStrategy::promega}) {
      const Solution pr = solve_pair_removal(ds, exact, strategy, 3, opts);
      require(pr.bits.fully_decided(), "undecided bits in the final solution");
      require(pr.converged, "pair removal did not converge");
      require(pr.cumulative_kt == plain.cumulative_kt,
              "dataset " + std::to_string(i) + ": removal changed the result");
    }
  }
}

// ---------------------------------------------------------------------------
// 7. the candidate-position encoding attains the optimum on n <= 4

void criterion_7() {
  for (int i = 0; i < 10; ++i) {
    const int n = 3 + i % 2;
    const Dataset ds = synthetic(n, 11, 8200 + i);
    const N2Encoding enc =
        build_n2_qubo(build_comparison(ds), static_cast<int>(ds.votes.size()));
    require(enc.penalty == static_cast<double>(n) * n * 11, "penalty formula");
    const SampleSet ss = exact_solve(enc.qubo);
    const OracleResult opt = brute_force(ds);
    for (const SampleRecord& rec : ss.records) {
      const auto decoded = enc.decode(rec.config);
      require(decoded.has_value(), "infeasible ground state");
      require(cumulative_kt(ds, *decoded) == opt.min_kt, "ground state misses the optimum");
    }
  }
}

// ---------------------------------------------------------------------------
// 8. SA reaches exact ground energies, and large penalties hurt num_occ

void criterion_8() {
  int hits = 0;
  for (int t = 0; t < 20; ++t) {
    const Dataset ds = synthetic(6, 11, 6100 + t);  // 15 variables
    const BiasMatrix b = bias_of(build_comparison(ds));
    const Qubo q = build_base_qubo(b, select_penalty(b, 11.0, Parity::odd, 0.5));
    const double ground = exact_solve(q).records.front().energy;
    SaParams p;
    p.reads = 2500;
    p.seed = 4000 + t;
    const SampleSet ss = sa_solve(q, p);
    require(ss.records.front().energy >= ground - 1e-9, "SA undercut the exact ground energy");
    if (ss.records.front().energy <= ground + 1e-9) ++hits;
  }
  require(hits >= 19,
          "SA matched the exact ground energy only " + std::to_string(hits) + "/20 times");

  const Dataset big = synthetic(10, 11, 123);
  const BiasMatrix b = bias_of(build_comparison(big));
  auto median_occ = [&](double penalty) {
    const Qubo q = build_base_qubo(b, penalty);
    std::vector<long> occs;
    for (int s = 0; s < 10; ++s) {
      SaParams p;
      p.reads = 2500;
      p.seed = 97000 + s;
      occs.push_back(sa_solve(q, p).occurrences_at_min());
    }
    std::sort(occs.begin(), occs.end());
    return (occs[4] + occs[5]) / 2.0;
  };
  const double occ_small = median_occ(2.0);
  const double occ_large = median_occ(50.0);
  require(occ_small >= occ_large,
          "median num_occ at P=2 (" + std::to_string(occ_small) + ") < at P=50 (" +
              std::to_string(occ_large) + ")");
}

// ---------------------------------------------------------------------------
// 9. partial, k-top and weighted variants solve to accuracy 1 against a
//    generalized-KT enumeration oracle

void criterion_9() {
  ExactSampler exact;
  // vote-route enumeration oracle, independent of the comparison matrix
  auto optima_of = [](const Dataset& ds) {
    std::vector<int> perm(ds.n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0.0;
    bool first = true;
    std::vector<Ranking> optima;
    do {
      const Ranking r = complete_ranking(perm);
      const double kt = generalized_kt(ds, r, ds.pair_weight);
      if (first || kt < best - 1e-9) {
        best = kt;
        optima.clear();
        optima.push_back(r);
        first = false;
      } else if (kt <= best + 1e-9) {
        optima.push_back(r);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return optima;
  };

  auto check = [&](const std::string& variant, const Dataset& ds, std::uint64_t seed) {
    IterOptions opts;
    opts.seed = seed;
    const Solution s = solve_iterative(ds, exact, opts);
    require(s.converged, variant + ": did not converge");
    require(accuracy(s.bits, optima_of(ds)) == 1, variant + ": accuracy 0");
  };

  for (int i = 0; i < 10; ++i) {
    const int n = 4 + i % 4;
    check("partial", synthetic(n, 11, 5200 + i, ListKind::partial, 2), 900 + i);
    check("ktop", synthetic(n, 11, 5300 + i, ListKind::ktop, 2), 910 + i);

    Dataset pos = synthetic(n, 11, 5400 + i);
    pos.pair_weight = WeightScheme::position(1.0);
    check("position", pos, 920 + i);

    Dataset dist = synthetic(n, 11, 5500 + i);
    dist.pair_weight = WeightScheme::distance();
    check("distance", dist, 930 + i);

    Dataset listw = synthetic(n, 11, 5600 + i);
    for (std::size_t v = 0; v < listw.votes.size(); ++v) {
      listw.votes[v].weight = 1.0 + static_cast<double>(v % 3);
    }
    check("list-weight", listw, 940 + i);
  }
}

// ---------------------------------------------------------------------------
// 10. structural property sweeps

void criterion_10() {
  Rng rng(1010);

  // KT metric axioms, n <= 6
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.below(5));
    auto mk = [&]() {
      std::vector<int> o(n);
      std::iota(o.begin(), o.end(), 0);
      rng.shuffle(o);
      return complete_ranking(o);
    };
    const Ranking a = mk(), b = mk(), c = mk();
    require(kendall_tau(a, b) == kendall_tau(b, a), "KT symmetry");
    require((kendall_tau(a, b) == 0) == (a.order == b.order), "KT identity");
    require(kendall_tau(a, c) <= kendall_tau(a, b) + kendall_tau(b, c), "KT triangle");
  }

  // represent/reconstruct round trip, n <= 10
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    rng.shuffle(o);
    const Ranking r = complete_ranking(o);
    require(reconstruct(represent(r), rng.next_u64()).order == r.order, "round trip");
  }

  // detect_cycles vs the relation oracle, n <= 7
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    UpperTriBits x(n);
    for (auto& bit : x.bits) bit = rng.coin() ? 1 : 0;
    const auto got = detect_cycles(x);
    const auto want = oracle::cycles_of_bits(x);
    require(got.size() == want.size(), "cycle count mismatch");
    for (const Cycle& c : got) require(want.count({c.i, c.j, c.k}) == 1, "cycle set mismatch");
    require(static_cast<long>(got.size()) <= num_triples(n), "N_max bound");
  }

  // N_max count identity
  for (int n = 3; n <= 12; ++n) {
    long scanned = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) ++scanned;
      }
    }
    require(scanned == num_triples(n), "N_max identity");
  }

  // determinism of every seeded pipeline
  const Dataset ds = synthetic(6, 11, 77);
  ExactSampler exact;
  IterOptions opts;
  opts.seed = 55;
  require(to_json_string(solve_iterative(ds, exact, opts)) ==
              to_json_string(solve_iterative(ds, exact, opts)),
          "iterative determinism");
  require(to_json_string(solve_base(ds, exact, 0.5, {}, 5)) ==
              to_json_string(solve_base(ds, exact, 0.5, {}, 5)),
          "base determinism");
  require(to_json_string(solve_pair_removal(ds, exact, PrStrategy::prhb, 2, opts)) ==
              to_json_string(solve_pair_removal(ds, exact, PrStrategy::prhb, 2, opts)),
          "pair-removal determinism");
  SaParams p;
  p.reads = 500;
  SaSampler sa1(p), sa2(p);
  require(to_json_string(solve_iterative(ds, sa1, opts)) ==
              to_json_string(solve_iterative(ds, sa2, opts)),
          "SA pipeline determinism");
  GenSpec gs;
  gs.n = 8;
  gs.votes = 11;
  gs.seed = 3;
  gs.mode = GenSpec::Mode::simplified;
  const auto g1 = gen_simplified(gs);
  const auto g2 = gen_simplified(gs);
  for (std::size_t v = 0; v < g1.dataset.votes.size(); ++v) {
    require(g1.dataset.votes[v].order == g2.dataset.votes[v].order, "generator determinism");
  }
}

struct Criterion {
  int id;
  std::string label;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact iterative solves equal brute force on 50 seeded datasets (< 2 min)",
       criterion_1},
      {2, "energy identity holds exactly for all rankings of 20 random datasets",
       criterion_2},
      {3, "cycle penalty polynomial is the exact violation indicator", criterion_3},
      {4, "penalty bound yields acyclic optima on all 3-candidate multisets", criterion_4},
      {5, "pivot baseline cannot reach the embedded fixture's optimum", criterion_5},
      {6, "pair removal preserves the exact result on 30 seeded datasets", criterion_6},
      {7, "candidate-position encoding decodes to brute-force optima", criterion_7},
      {8, "SA matches exact ground energies; larger penalties reduce num_occ", criterion_8},
      {9, "partial, k-top and weighted variants solve to accuracy 1", criterion_9},
      {10, "structural property sweeps", criterion_10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", verdict.c_str(), c.id, c.label.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
