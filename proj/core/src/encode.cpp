#include "kemeny/encode.hpp"

#include <algorithm>
#include <stdexcept>

namespace kemeny {

double select_penalty(const BiasMatrix& b, double total_weight, Parity parity,
                      double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double cap = parity == Parity::odd ? total_weight - 2.0 : total_weight;
  // the odd cap can go negative on one- or two-vote datasets; the penalty
  // still has to stay positive
  return std::max(epsilon, std::min(b.max_abs(), cap) + epsilon);
}

void add_cycle_penalty(Qubo& q, const Cycle& c, double penalty, int n) {
  const int ij = pair_index(c.i, c.j, n);
  const int ik = pair_index(c.i, c.k, n);
  const int jk = pair_index(c.j, c.k, n);
  q.add_linear(ik, penalty);
  q.add_quadratic(ij, jk, penalty);
  q.add_quadratic(ij, ik, -penalty);
  q.add_quadratic(jk, ik, -penalty);
}

namespace {

Qubo linear_qubo(const BiasMatrix& b) {
  Qubo q;
  q.num_vars = static_cast<int>(num_pairs(b.n));
  for (int i = 0; i < b.n; ++i) {
    for (int j = i + 1; j < b.n; ++j) {
      const double bias = b.at(i, j);
      if (bias != 0.0) q.add_linear(pair_index(i, j, b.n), bias);
    }
  }
  return q;
}

}  // namespace

Qubo build_base_qubo(const BiasMatrix& b, double penalty) {
  if (!(penalty > 0.0)) throw std::invalid_argument("penalty must be positive");
  Qubo q = linear_qubo(b);
  for (int i = 0; i < b.n; ++i) {
    for (int j = i + 1; j < b.n; ++j) {
      for (int k = j + 1; k < b.n; ++k) {
        add_cycle_penalty(q, Cycle{i, j, k}, penalty, b.n);
      }
    }
  }
  return q;
}

Qubo build_iterative_qubo(const BiasMatrix& b, const PenaltyLedger& ledger) {
  Qubo q = linear_qubo(b);
  for (const auto& [cycle, penalty] : ledger) {
    if (!(penalty > 0.0)) throw std::invalid_argument("ledger penalties must be positive");
    add_cycle_penalty(q, cycle, penalty, b.n);
  }
  return q;
}

UpperTriBits ReducedQubo::expand(std::span<const std::uint8_t> config) const {
  if (config.size() != var_pairs.size()) {
    throw std::invalid_argument("configuration length does not match the reduced QUBO");
  }
  UpperTriBits x(n);
  for (const CandidatePair& p : removed) {
    x.set(p.first, p.second, UpperTriBits::kUndecided);
  }
  for (std::size_t v = 0; v < var_pairs.size(); ++v) {
    x.set(var_pairs[v].first, var_pairs[v].second, config[v] ? 1 : 0);
  }
  return x;
}

ReducedQubo build_pair_removal_qubo(const BiasMatrix& b, const PenaltyLedger& ledger,
                                    const std::set<CandidatePair>& removed) {
  for (const auto& [cycle, penalty] : ledger) {
    for (const CandidatePair& p : removed) {
      if (cycle.contains_pair(p)) {
        throw std::invalid_argument("cannot remove a pair that is part of a penalized cycle");
      }
    }
  }
  ReducedQubo rq;
  rq.n = b.n;
  rq.removed = removed;
  std::vector<int> var_of(num_pairs(b.n), -1);
  for (int i = 0; i < b.n; ++i) {
    for (int j = i + 1; j < b.n; ++j) {
      if (removed.count({i, j})) continue;
      var_of[pair_index(i, j, b.n)] = static_cast<int>(rq.var_pairs.size());
      rq.var_pairs.push_back({i, j});
    }
  }
  rq.qubo.num_vars = static_cast<int>(rq.var_pairs.size());
  for (const CandidatePair& p : rq.var_pairs) {
    const double bias = b.at(p.first, p.second);
    if (bias != 0.0) rq.qubo.add_linear(var_of[pair_index(p.first, p.second, b.n)], bias);
  }
  for (const auto& [cycle, penalty] : ledger) {
    const int ij = var_of[pair_index(cycle.i, cycle.j, b.n)];
    const int ik = var_of[pair_index(cycle.i, cycle.k, b.n)];
    const int jk = var_of[pair_index(cycle.j, cycle.k, b.n)];
    rq.qubo.add_linear(ik, penalty);
    rq.qubo.add_quadratic(ij, jk, penalty);
    rq.qubo.add_quadratic(ij, ik, -penalty);
    rq.qubo.add_quadratic(jk, ik, -penalty);
  }
  return rq;
}

}  // namespace kemeny
