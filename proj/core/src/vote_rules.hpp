#pragma once

// Internal presence/position rules shared by the comparison-matrix builder
// and the generalized distance, so the two sides stay consistent.

#include <stdexcept>
#include <vector>

#include "kemeny/ranking.hpp"

namespace kemeny::detail {

inline std::vector<int> positions_of(const Ranking& r, int n) {
  std::vector<int> pos(n, -1);
  for (int p = 0; p < r.size(); ++p) {
    const int c = r.order[p];
    if (c < 0 || c >= n) throw std::invalid_argument("candidate index out of range");
    pos[c] = p;
  }
  return pos;
}

// Per-vote pair contribution under the presence rules. Returns false when
// the pair contributes nothing; otherwise sets prefers_i and the 1-based
// positions used by the alpha weight. A k-top vote places absent candidates
// just below its last listed slot.
inline bool vote_pair_state(const std::vector<int>& pos, int len, ListKind kind, int i, int j,
                            bool& prefers_i, int& alpha_pos_i, int& alpha_pos_j) {
  const int pi = pos[i];
  const int pj = pos[j];
  if (pi >= 0 && pj >= 0) {
    prefers_i = pi < pj;
    alpha_pos_i = pi + 1;
    alpha_pos_j = pj + 1;
    return true;
  }
  if (kind == ListKind::ktop && (pi >= 0 || pj >= 0)) {
    prefers_i = pi >= 0;
    alpha_pos_i = (pi >= 0) ? pi + 1 : len + 1;
    alpha_pos_j = (pj >= 0) ? pj + 1 : len + 1;
    return true;
  }
  return false;
}

}  // namespace kemeny::detail
