#include "kemeny/samplers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "kemeny/errors.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

namespace {

struct Adjacency {
  std::vector<double> linear;
  std::vector<std::vector<std::pair<int, double>>> neighbors;

  explicit Adjacency(const Qubo& q)
      : linear(q.num_vars, 0.0), neighbors(q.num_vars) {
    for (const auto& [v, c] : q.linear) linear[v] = c;
    for (const auto& [uv, c] : q.quadratic) {
      neighbors[uv.first].emplace_back(uv.second, c);
      neighbors[uv.second].emplace_back(uv.first, c);
    }
  }

  // lin[v] + sum of couplings to set neighbors; flipping v changes the
  // energy by +field (0 -> 1) or -field (1 -> 0)
  double field(int v, const std::vector<std::uint8_t>& x) const {
    double f = linear[v];
    for (const auto& [u, c] : neighbors[v]) {
      if (x[u]) f += c;
    }
    return f;
  }
};

void sort_records(std::vector<SampleRecord>& records) {
  std::sort(records.begin(), records.end(), [](const SampleRecord& a, const SampleRecord& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.config < b.config;
  });
}

}  // namespace

const SampleRecord& SampleSet::best() const {
  if (records.empty()) throw std::logic_error("empty sample set");
  const SampleRecord* pick = &records.front();
  for (const SampleRecord& r : records) {
    if (r.energy > pick->energy) break;  // records are sorted by energy
    if (r.num_occ > pick->num_occ) pick = &r;
  }
  return *pick;
}

long SampleSet::occurrences_at_min() const {
  if (records.empty()) return 0;
  const double emin = records.front().energy;
  long total = 0;
  for (const SampleRecord& r : records) {
    if (r.energy > emin) break;
    total += r.num_occ;
  }
  return total;
}

int ExactSampler::default_cap() {
  if (const char* env = std::getenv("KEMENY_QA_EXACT_CAP")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 24;
}

SampleSet exact_solve(const Qubo& q) { return exact_solve(q, ExactSampler::default_cap()); }

SampleSet exact_solve(const Qubo& q, int cap) {
  if (q.num_vars > cap) {
    throw too_large_error("exact_solve: " + std::to_string(q.num_vars) +
                          " variables exceed the cap of " + std::to_string(cap));
  }
  SampleSet out;
  out.backend = "exact";
  out.reads = 0;
  out.seed = 0;

  const int V = q.num_vars;
  const Adjacency adj(q);
  std::vector<std::uint8_t> x(V, 0);
  double energy = q.offset;

  // Gray-code walk with incremental deltas; the float drift over millions
  // of updates is absorbed by a slack window plus periodic resync, and the
  // surviving candidates are re-evaluated exactly afterwards.
  const double slack = 1e-7 * (1.0 + q.coeff_mass());
  constexpr std::size_t kCandidateCap = std::size_t{1} << 17;
  double best = energy;
  std::vector<std::vector<std::uint8_t>> candidates{x};

  auto compress = [&]() {
    double exact_best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) exact_best = std::min(exact_best, q.energy(c));
    std::vector<std::vector<std::uint8_t>> kept;
    for (auto& c : candidates) {
      if (q.energy(c) <= exact_best + slack * 0.5) kept.push_back(std::move(c));
    }
    candidates = std::move(kept);
  };

  const unsigned long long total = 1ULL << V;
  for (unsigned long long g = 1; g < total; ++g) {
    const int v = std::countr_zero(g);
    const double f = adj.field(v, x);
    energy += x[v] ? -f : f;
    x[v] ^= 1;
    if ((g & 0xFFFULL) == 0) energy = q.energy(x);  // resync drift
    if (energy < best - slack) {
      best = energy;
      candidates.clear();
      candidates.push_back(x);
    } else if (energy <= best + slack) {
      candidates.push_back(x);
      if (candidates.size() > kCandidateCap) {
        compress();
        if (candidates.size() > kCandidateCap) {
          throw too_large_error("exact_solve: ground-state degeneracy exceeds the cap");
        }
      }
    }
  }

  double exact_best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) exact_best = std::min(exact_best, q.energy(c));
  const double tie_tol = 1e-9 * (1.0 + std::abs(exact_best));
  for (auto& c : candidates) {
    if (q.energy(c) <= exact_best + tie_tol) {
      out.records.push_back(SampleRecord{std::move(c), 0.0, 1});
    }
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const SampleRecord& a, const SampleRecord& b) { return a.config < b.config; });
  out.records.erase(std::unique(out.records.begin(), out.records.end(),
                                [](const SampleRecord& a, const SampleRecord& b) {
                                  return a.config == b.config;
                                }),
                    out.records.end());
  for (SampleRecord& r : out.records) r.energy = q.energy(r.config);
  sort_records(out.records);
  return out;
}

SampleSet sa_solve(const Qubo& q, const SaParams& p) {
  if (p.reads < 1) throw std::invalid_argument("sa_solve needs reads >= 1");
  if (p.sweeps < 1) throw std::invalid_argument("sa_solve needs sweeps >= 1");

  double beta_start = p.beta_start;
  double beta_end = p.beta_end;
  if (beta_start <= 0.0 || beta_end <= 0.0) {
    const double hi = q.max_abs_coeff();
    const double lo = q.min_nonzero_abs_coeff();
    beta_start = hi > 0.0 ? 0.1 / hi : 0.1;
    beta_end = lo > 0.0 ? 10.0 / lo : 10.0;
    if (beta_start >= beta_end) beta_start = beta_end / 100.0;
  }
  if (!(beta_start < beta_end)) {
    throw std::invalid_argument("sa_solve needs beta_start < beta_end");
  }

  const int V = q.num_vars;
  const Adjacency adj(q);
  std::vector<double> betas(p.sweeps);
  const double ratio = beta_end / beta_start;
  for (int s = 0; s < p.sweeps; ++s) {
    const double t = p.sweeps > 1 ? static_cast<double>(s) / (p.sweeps - 1) : 1.0;
    betas[s] = beta_start * std::pow(ratio, t);
  }

  std::vector<std::vector<std::uint8_t>> finals(p.reads);
  auto run_read = [&](long r) {
    Rng rng(child_seed(p.seed, static_cast<std::uint64_t>(r)));
    std::vector<std::uint8_t> x(V);
    for (int v = 0; v < V; ++v) x[v] = rng.coin() ? 1 : 0;
    for (double beta : betas) {
      for (int v = 0; v < V; ++v) {
        const double f = adj.field(v, x);
        const double delta = x[v] ? -f : f;
        if (delta <= 0.0 || rng.unit() < std::exp(-beta * delta)) {
          x[v] ^= 1;
        }
      }
    }
    finals[r] = std::move(x);
  };

  int threads = p.threads > 0 ? p.threads
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<long>(threads, p.reads));
  if (threads == 1) {
    for (long r = 0; r < p.reads; ++r) run_read(r);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (long r = next.fetch_add(1); r < p.reads; r = next.fetch_add(1)) {
          run_read(r);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<std::uint8_t>, long> counts;
  for (auto& cfg : finals) ++counts[std::move(cfg)];

  SampleSet out;
  out.backend = "sa";
  out.reads = p.reads;
  out.seed = p.seed;
  out.records.reserve(counts.size());
  for (auto& [cfg, occ] : counts) {
    out.records.push_back(SampleRecord{cfg, q.energy(cfg), occ});
  }
  sort_records(out.records);
  return out;
}

SampleSet ExactSampler::sample(const Qubo& q, std::uint64_t) { return exact_solve(q, cap_); }

SampleSet SaSampler::sample(const Qubo& q, std::uint64_t seed) {
  SaParams p = params_;
  p.seed = seed;
  return sa_solve(q, p);
}

}  // namespace kemeny
