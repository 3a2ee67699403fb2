#include "kemeny/n2.hpp"

#include <cmath>
#include <stdexcept>

namespace kemeny {

std::optional<Ranking> N2Encoding::decode(std::span<const std::uint8_t> config) const {
  if (static_cast<int>(config.size()) != n * n) {
    throw std::invalid_argument("configuration length does not match n^2");
  }
  std::vector<int> pos_of(n, -1);
  std::vector<int> cand_at(n, -1);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < n; ++p) {
      if (!config[var(c, p)]) continue;
      if (pos_of[c] != -1 || cand_at[p] != -1) return std::nullopt;
      pos_of[c] = p;
      cand_at[p] = c;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (pos_of[c] == -1) return std::nullopt;
  }
  return complete_ranking(cand_at);
}

N2Encoding build_n2_qubo(const PairMatrix& pm, int total_votes) {
  for (int i = 0; i < pm.n; ++i) {
    for (int j = 0; j < pm.n; ++j) {
      if (std::abs(pm.at(i, j) - std::round(pm.at(i, j))) > 1e-9) {
        throw std::invalid_argument("n^2 encoding needs integral tallies");
      }
    }
  }
  N2Encoding enc;
  const int n = pm.n;
  enc.n = n;
  enc.penalty = static_cast<double>(n) * n * total_votes;
  Qubo& q = enc.qubo;
  q.num_vars = n * n;

  // one-hot rows (candidates) and columns (positions):
  // P(1 - sum x)^2 = P - P sum x + 2P sum_{pairs} x x
  const double P = enc.penalty;
  q.offset = 2.0 * n * P;
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < n; ++p) {
      q.add_linear(enc.var(c, p), -2.0 * P);
      for (int p2 = p + 1; p2 < n; ++p2) {
        q.add_quadratic(enc.var(c, p), enc.var(c, p2), 2.0 * P);  // row
        q.add_quadratic(enc.var(p, c), enc.var(p2, c), 2.0 * P);  // column
      }
    }
  }

  // placing i above j pays the votes preferring j over i, so feasible
  // energies equal the cumulative KT of the decoded ranking
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double disagree = pm.at(j, i);
      if (disagree == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          q.add_quadratic(enc.var(i, k), enc.var(j, l), disagree);
        }
      }
    }
  }
  return enc;
}

}  // namespace kemeny
