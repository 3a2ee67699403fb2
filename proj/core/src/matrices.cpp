#include "kemeny/matrices.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kemeny/rng.hpp"
#include "vote_rules.hpp"

namespace kemeny {

double BiasMatrix::max_abs() const {
  double m = 0.0;
  for (double v : b) m = std::max(m, std::abs(v));
  return m;
}

bool UpperTriBits::fully_decided() const {
  return std::none_of(bits.begin(), bits.end(),
                      [](std::int8_t v) { return v == kUndecided; });
}

PairMatrix build_comparison(const Dataset& ds) {
  ds.validate();
  PairMatrix pm(ds.n);
  for (const Ranking& vote : ds.votes) {
    const auto pos = detail::positions_of(vote, ds.n);
    const int len = vote.size();
    for (int i = 0; i < ds.n; ++i) {
      for (int j = i + 1; j < ds.n; ++j) {
        bool prefers_i = false;
        int ai = 0;
        int aj = 0;
        if (!detail::vote_pair_state(pos, len, vote.kind, i, j, prefers_i, ai, aj)) {
          continue;
        }
        const double contribution = vote.weight * ds.pair_weight.at(ai, aj);
        if (prefers_i) {
          pm.at(i, j) += contribution;
        } else {
          pm.at(j, i) += contribution;
        }
      }
    }
  }
#ifndef NDEBUG
  // unit weights under the uniform scheme tally exact integers
  if (ds.unweighted() && ds.pair_weight.is_uniform()) {
    for (double w : pm.w) assert(w == std::round(w));
  }
#endif
  return pm;
}

BiasMatrix bias_of(const PairMatrix& pm) {
  BiasMatrix b(pm.n);
  for (int i = 0; i < pm.n; ++i) {
    for (int j = i + 1; j < pm.n; ++j) {
      b.at(i, j) = pm.at(j, i) - pm.at(i, j);
    }
  }
  return b;
}

UpperTriBits represent(const Ranking& r) {
  if (r.kind != ListKind::complete) {
    throw std::invalid_argument("represent needs a complete ranking");
  }
  const int n = r.size();
  const auto pos = detail::positions_of(r, n);
  UpperTriBits x(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      x.set(i, j, pos[i] < pos[j] ? 1 : 0);
    }
  }
  return x;
}

std::vector<int> candidate_scores(const UpperTriBits& x) {
  if (!x.fully_decided()) {
    throw std::logic_error("candidate scores need fully decided bits");
  }
  std::vector<int> scores(x.n, 0);
  for (int i = 0; i < x.n; ++i) {
    for (int j = i + 1; j < x.n; ++j) {
      if (x.get(i, j) == 1) {
        ++scores[i];
      } else {
        ++scores[j];
      }
    }
  }
  return scores;
}

Ranking reconstruct(const UpperTriBits& x, std::uint64_t tie_seed) {
  const auto scores = candidate_scores(x);
  std::vector<int> candidates(x.n);
  std::iota(candidates.begin(), candidates.end(), 0);
  Rng rng(tie_seed);
  rng.shuffle(candidates);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&scores](int a, int b) { return scores[a] > scores[b]; });
  return complete_ranking(std::move(candidates));
}

int accuracy(const UpperTriBits& x, const std::vector<Ranking>& optima) {
  if (optima.empty()) throw std::invalid_argument("accuracy needs a nonempty optima set");
  for (const Ranking& opt : optima) {
    if (represent(opt).bits == x.bits) return 1;
  }
  return 0;
}

}  // namespace kemeny
