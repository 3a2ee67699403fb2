#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace kemeny {

/// An unordered candidate pair stored with i < j.
using CandidatePair = std::pair<int, int>;

inline constexpr long num_pairs(int n) {
  return static_cast<long>(n) * (n - 1) / 2;
}

/// Maximum number of candidate triples, n(n-1)(n-2)/3!.
inline constexpr long num_triples(int n) {
  return static_cast<long>(n) * (n - 1) * (n - 2) / 6;
}

/// Lexicographic index of pair (i, j), i < j, among all pairs over n
/// candidates: i*n - i(i+1)/2 + (j - i - 1). Bijective onto [0, n(n-1)/2).
inline int pair_index(int i, int j, int n) {
  if (i < 0 || i >= j || j >= n) {
    throw std::invalid_argument("pair_index: need 0 <= i < j < n");
  }
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of pair_index.
inline CandidatePair pair_of_index(int index, int n) {
  int i = 0;
  long row = n - 1;
  long idx = index;
  while (idx >= row) {
    idx -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + static_cast<int>(idx)};
}

}  // namespace kemeny
