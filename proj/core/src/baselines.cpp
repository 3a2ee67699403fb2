#include "kemeny/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kemeny/errors.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

OracleResult brute_force(const Dataset& ds, int cap) {
  ds.validate();
  if (ds.n > cap) {
    throw too_large_error("brute_force: " + std::to_string(ds.n) +
                          " candidates exceed the cap of " + std::to_string(cap));
  }
  const PairMatrix pm = build_comparison(ds);
  std::vector<int> perm(ds.n);
  std::iota(perm.begin(), perm.end(), 0);

  OracleResult out;
  out.min_kt = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> minimizers;
  do {
    // ranking r pays, for every ordered pair (a before b), the votes
    // preferring b over a
    double cost = 0.0;
    for (int a = 0; a < ds.n; ++a) {
      for (int b = a + 1; b < ds.n; ++b) {
        cost += pm.at(perm[b], perm[a]);
      }
    }
    if (minimizers.empty()) {
      out.min_kt = cost;
      minimizers.push_back(perm);
      continue;
    }
    const double tol = 1e-9 * (1.0 + std::abs(out.min_kt));
    if (cost < out.min_kt - tol) {
      out.min_kt = cost;
      minimizers.clear();
      minimizers.push_back(perm);
    } else if (cost <= out.min_kt + tol) {
      minimizers.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  out.optima.reserve(minimizers.size());
  for (auto& m : minimizers) out.optima.push_back(complete_ranking(std::move(m)));
  return out;
}

namespace {

std::vector<int> kwiksort_rec(const PairMatrix& pm, std::vector<int> elems, Rng& rng) {
  if (elems.size() <= 1) return elems;
  const std::size_t pivot_at = static_cast<std::size_t>(rng.below(elems.size()));
  const int pivot = elems[pivot_at];
  std::vector<int> left;
  std::vector<int> right;
  for (int e : elems) {
    if (e == pivot) continue;
    const double wep = pm.at(e, pivot);
    const double wpe = pm.at(pivot, e);
    if (wep > wpe) {
      left.push_back(e);
    } else if (wpe > wep) {
      right.push_back(e);
    } else if (rng.coin()) {
      left.push_back(e);
    } else {
      right.push_back(e);
    }
  }
  std::vector<int> out = kwiksort_rec(pm, std::move(left), rng);
  out.push_back(pivot);
  const std::vector<int> tail = kwiksort_rec(pm, std::move(right), rng);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

using ReachMemo = std::map<std::vector<int>, std::set<std::vector<int>>>;

const std::set<std::vector<int>>& reachable_rec(const PairMatrix& pm, std::vector<int> elems,
                                                ReachMemo& memo) {
  if (auto it = memo.find(elems); it != memo.end()) return it->second;
  std::set<std::vector<int>> out;
  if (elems.size() <= 1) {
    out.insert(elems);
    return memo.emplace(std::move(elems), std::move(out)).first->second;
  }
  for (int pivot : elems) {
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> tied;
    for (int e : elems) {
      if (e == pivot) continue;
      const double wep = pm.at(e, pivot);
      const double wpe = pm.at(pivot, e);
      if (wep > wpe) {
        left.push_back(e);
      } else if (wpe > wep) {
        right.push_back(e);
      } else {
        tied.push_back(e);
      }
    }
    // both tie resolutions, per tied element
    const std::size_t splits = std::size_t{1} << tied.size();
    for (std::size_t mask = 0; mask < splits; ++mask) {
      std::vector<int> l = left;
      std::vector<int> r = right;
      for (std::size_t t = 0; t < tied.size(); ++t) {
        if (mask & (std::size_t{1} << t)) {
          l.push_back(tied[t]);
        } else {
          r.push_back(tied[t]);
        }
      }
      std::sort(l.begin(), l.end());
      std::sort(r.begin(), r.end());
      const auto& lefts = reachable_rec(pm, l, memo);
      const auto& rights = reachable_rec(pm, r, memo);
      for (const auto& lv : lefts) {
        for (const auto& rv : rights) {
          std::vector<int> full = lv;
          full.push_back(pivot);
          full.insert(full.end(), rv.begin(), rv.end());
          out.insert(std::move(full));
        }
      }
    }
  }
  return memo.emplace(std::move(elems), std::move(out)).first->second;
}

}  // namespace

Ranking kwiksort(const PairMatrix& pm, std::uint64_t seed) {
  std::vector<int> elems(pm.n);
  std::iota(elems.begin(), elems.end(), 0);
  Rng rng(seed);
  return complete_ranking(kwiksort_rec(pm, std::move(elems), rng));
}

std::vector<Ranking> kwiksort_reachable(const PairMatrix& pm, int cap) {
  if (pm.n > cap) {
    throw too_large_error("kwiksort_reachable: " + std::to_string(pm.n) +
                          " candidates exceed the cap of " + std::to_string(cap));
  }
  std::vector<int> elems(pm.n);
  std::iota(elems.begin(), elems.end(), 0);
  ReachMemo memo;
  const auto& reach = reachable_rec(pm, std::move(elems), memo);
  std::vector<Ranking> out;
  out.reserve(reach.size());
  for (const auto& order : reach) out.push_back(complete_ranking(order));
  return out;
}

}  // namespace kemeny
