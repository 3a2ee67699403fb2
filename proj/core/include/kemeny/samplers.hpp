#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kemeny/qubo.hpp"

namespace kemeny {

struct SampleRecord {
  std::vector<std::uint8_t> config;
  double energy = 0.0;
  long num_occ = 0;
};

/// Solver output, sorted by ascending (energy, configuration).
struct SampleSet {
  std::vector<SampleRecord> records;
  std::string backend;
  long reads = 0;
  std::uint64_t seed = 0;

  /// Lowest-energy record; ties broken by highest num_occ, then by
  /// lexicographically smallest configuration.
  const SampleRecord& best() const;
  /// Total occurrences across all records at the minimum sampled energy.
  long occurrences_at_min() const;
};

struct SaParams {
  long reads = 2500;
  int sweeps = 100;
  double beta_start = 0.0;  // 0 = auto-scale from coefficient magnitudes
  double beta_end = 0.0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

/// Exhaustive enumeration of all 2^num_vars configurations; returns every
/// ground state (ties included) with num_occ = 1. Throws too_large_error
/// past the cap.
SampleSet exact_solve(const Qubo& q, int cap);
SampleSet exact_solve(const Qubo& q);

/// Multi-read single-spin-flip Metropolis anneal over a geometric beta
/// schedule, each read from a uniform random start. Read r uses a child
/// seed of (seed, r), so results are bitwise reproducible for any thread
/// count. Records aggregate identical final configurations.
SampleSet sa_solve(const Qubo& q, const SaParams& p);

/// Uniform sampler contract for the solve pipelines.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const Qubo& q, std::uint64_t seed) = 0;
  virtual std::string name() const = 0;
};

class ExactSampler final : public Sampler {
 public:
  explicit ExactSampler(int cap = default_cap()) : cap_(cap) {}
  SampleSet sample(const Qubo& q, std::uint64_t seed) override;
  std::string name() const override { return "exact"; }

  /// 24 unless overridden by the KEMENY_QA_EXACT_CAP environment variable.
  static int default_cap();
  int cap() const { return cap_; }

 private:
  int cap_;
};

class SaSampler final : public Sampler {
 public:
  explicit SaSampler(SaParams params = {}) : params_(params) {}
  SampleSet sample(const Qubo& q, std::uint64_t seed) override;
  std::string name() const override { return "sa"; }
  const SaParams& params() const { return params_; }

 private:
  SaParams params_;
};

}  // namespace kemeny
