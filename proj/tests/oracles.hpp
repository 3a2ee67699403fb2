#pragma once

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's code paths: distances come from
// direct pair scans over the vote lists, optima from full permutation
// enumeration over those distances, and cycles from the induced relation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "kemeny/matrices.hpp"
#include "kemeny/qubo.hpp"

namespace oracle {

inline int position_in(const std::vector<int>& order, int candidate) {
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (order[p] == candidate) return static_cast<int>(p);
  }
  return -1;
}

/// Discordant pair count between two complete orders.
inline long kt(const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  long d = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool a_first = position_in(a, i) < position_in(a, j);
      const bool b_first = position_in(b, i) < position_in(b, j);
      if (a_first != b_first) ++d;
    }
  }
  return d;
}

inline long cumulative_kt(const std::vector<std::vector<int>>& votes,
                          const std::vector<int>& r) {
  long total = 0;
  for (const auto& v : votes) total += kt(v, r);
  return total;
}

struct KemenyOptimum {
  long min_kt = 0;
  std::set<std::vector<int>> optima;
};

/// Full enumeration of all n! orders against the vote lists.
inline KemenyOptimum kemeny_min(int n, const std::vector<std::vector<int>>& votes) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  KemenyOptimum out;
  bool first = true;
  do {
    const long c = cumulative_kt(votes, perm);
    if (first || c < out.min_kt) {
      out.min_kt = c;
      out.optima.clear();
      out.optima.insert(perm);
      first = false;
    } else if (c == out.min_kt) {
      out.optima.insert(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Transitivity violations read off the induced full relation.
inline std::set<std::array<int, 3>> cycles_of_bits(const kemeny::UpperTriBits& x) {
  const int n = x.n;
  std::vector<std::vector<bool>> prefers(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ij = x.get(i, j) == 1;
      prefers[i][j] = ij;
      prefers[j][i] = !ij;
    }
  }
  std::set<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (prefers[a][b] && prefers[b][c] && prefers[c][a]) {
          std::array<int, 3> t{a, b, c};
          std::sort(t.begin(), t.end());
          out.insert(t);
        }
      }
    }
  }
  return out;
}

/// Exhaustive minimum of a QUBO by plain evaluation of every configuration.
inline double qubo_min_energy(const kemeny::Qubo& q) {
  const int V = q.num_vars;
  double best = 0.0;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask) {
    std::vector<std::uint8_t> cfg(V);
    for (int v = 0; v < V; ++v) cfg[v] = (mask >> v) & 1u;
    double e = q.offset;
    for (const auto& [v, c] : q.linear) {
      if (cfg[v]) e += c;
    }
    for (const auto& [uv, c] : q.quadratic) {
      if (cfg[uv.first] && cfg[uv.second]) e += c;
    }
    if (first || e < best) {
      best = e;
      first = false;
    }
  }
  return best;
}

/// All configurations attaining the exhaustive minimum.
inline std::set<std::vector<std::uint8_t>> qubo_ground_set(const kemeny::Qubo& q,
                                                           double tol = 1e-9) {
  const double best = qubo_min_energy(q);
  std::set<std::vector<std::uint8_t>> out;
  const int V = q.num_vars;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask) {
    std::vector<std::uint8_t> cfg(V);
    for (int v = 0; v < V; ++v) cfg[v] = (mask >> v) & 1u;
    double e = q.offset;
    for (const auto& [v, c] : q.linear) {
      if (cfg[v]) e += c;
    }
    for (const auto& [uv, c] : q.quadratic) {
      if (cfg[uv.first] && cfg[uv.second]) e += c;
    }
    if (e <= best + tol) out.insert(cfg);
  }
  return out;
}

}  // namespace oracle
