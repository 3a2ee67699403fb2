#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/ranking.hpp"

namespace kemeny {

struct GenSpec {
  enum class Mode { synthetic, simplified };

  int n = 0;
  int votes = 11;
  std::uint64_t seed = 0;
  Mode mode = Mode::synthetic;
  int min_sublists = 3;  // simplified mode only
  ListKind kind = ListKind::complete;
  int min_len = 1;  // shortest vote when kind is partial/ktop
};

/// Independent uniform permutations of [0, n), one per vote; deterministic
/// per seed. Non-complete kinds truncate each vote to a uniformly sampled
/// length in [min_len, n].
Dataset gen_synthetic(const GenSpec& spec);

struct SimplifiedResult {
  Dataset dataset;
  /// Cut positions per vote (values in [1, n-1]); kept so tests can verify
  /// that cross-sublist order was preserved.
  std::vector<std::vector<int>> cuts;
};

/// Identity list cut at (min_sublists - 1) or more uniformly chosen distinct
/// points into contiguous sublists, each permuted independently with the
/// sublist order preserved.
SimplifiedResult gen_simplified(const GenSpec& spec);

/// Truncates complete votes to per-vote uniform lengths in [min_len, n] and
/// relabels them with the requested kind.
Dataset truncate_votes(const Dataset& ds, ListKind kind, int min_len, std::uint64_t seed);

/// The embedded 5-candidate, 11-vote fixture on which exhaustive pivot
/// exploration cannot reach any optimum.
Dataset appendix_e_dataset();

}  // namespace kemeny
