#include "kemeny/distance.hpp"

#include <stdexcept>
#include <vector>

#include "kemeny/pairs.hpp"
#include "vote_rules.hpp"

namespace kemeny {

long kendall_tau(const Ranking& r1, const Ranking& r2) {
  if (r1.kind != ListKind::complete || r2.kind != ListKind::complete) {
    throw std::invalid_argument("kendall_tau needs complete rankings");
  }
  if (r1.size() != r2.size()) {
    throw std::invalid_argument("kendall_tau needs rankings over the same candidates");
  }
  const int n = r1.size();
  const auto p1 = detail::positions_of(r1, n);
  const auto p2 = detail::positions_of(r2, n);
  for (int c = 0; c < n; ++c) {
    if (p1[c] < 0 || p2[c] < 0) {
      throw std::invalid_argument("kendall_tau needs rankings over the same candidates");
    }
  }
  long discordant = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((p1[i] < p1[j]) != (p2[i] < p2[j])) ++discordant;
    }
  }
  return discordant;
}

double generalized_kt(const Dataset& ds, const Ranking& r, const WeightScheme& ws) {
  ws.validate();
  if (r.kind != ListKind::complete || r.size() != ds.n) {
    throw std::invalid_argument("generalized_kt needs a complete ranking over the dataset");
  }
  const auto rpos = detail::positions_of(r, ds.n);
  double total = 0.0;
  for (const Ranking& vote : ds.votes) {
    const auto vpos = detail::positions_of(vote, ds.n);
    const int len = vote.size();
    for (int i = 0; i < ds.n; ++i) {
      for (int j = i + 1; j < ds.n; ++j) {
        bool vote_prefers_i = false;
        int ai = 0;
        int aj = 0;
        if (!detail::vote_pair_state(vpos, len, vote.kind, i, j, vote_prefers_i, ai, aj)) {
          continue;
        }
        const bool r_prefers_i = rpos[i] < rpos[j];
        if (vote_prefers_i != r_prefers_i) {
          total += vote.weight * ws.at(ai, aj);
        }
      }
    }
  }
  return total;
}

double cumulative_kt(const Dataset& ds, const Ranking& r) {
  return generalized_kt(ds, r, ds.pair_weight);
}

double normalized_kt(const Dataset& ds, const Ranking& r) {
  const double denom = ds.total_weight() * static_cast<double>(num_pairs(ds.n));
  if (denom == 0.0) return 0.0;  // n = 1
  return cumulative_kt(ds, r) / denom;
}

}  // namespace kemeny
