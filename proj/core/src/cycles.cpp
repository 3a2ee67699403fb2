#include "kemeny/cycles.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace kemeny {

OmegaMatrix omega(const BiasMatrix& b) {
  OmegaMatrix om(b.n);
  for (int i = 0; i < b.n; ++i) {
    for (int j = i + 1; j < b.n; ++j) {
      const double bias = b.at(i, j);
      om.at(i, j) = bias < 0.0 ? 1.0 : (bias > 0.0 ? 0.0 : 0.5);
    }
  }
  return om;
}

std::set<Cycle> initial_cycles(const OmegaMatrix& om, Parity parity) {
  std::set<Cycle> out;
  for (int i = 0; i < om.n; ++i) {
    for (int j = i + 1; j < om.n; ++j) {
      for (int k = j + 1; k < om.n; ++k) {
        const double wij = om.at(i, j);
        const double wik = om.at(i, k);
        const double wjk = om.at(j, k);
        bool hit = false;
        if (parity == Parity::odd) {
          hit = (wij == 0.0 && wik == 1.0 && wjk == 0.0) ||
                (wij == 1.0 && wik == 0.0 && wjk == 1.0);
        } else {
          hit = (wij != 1.0 && wik != 0.0 && wjk != 1.0) ||
                (wij != 0.0 && wik != 1.0 && wjk != 0.0);
        }
        if (hit) out.insert(Cycle{i, j, k});
      }
    }
  }
  return out;
}

std::set<Cycle> detect_cycles(const UpperTriBits& x) {
  if (!x.fully_decided()) {
    throw std::logic_error("detect_cycles needs fully decided bits");
  }
  std::set<Cycle> out;
  for (int i = 0; i < x.n; ++i) {
    for (int j = i + 1; j < x.n; ++j) {
      const auto xij = x.get(i, j);
      for (int k = j + 1; k < x.n; ++k) {
        const auto xik = x.get(i, k);
        const auto xjk = x.get(j, k);
        if ((xij == 1 && xjk == 1 && xik == 0) || (xij == 0 && xjk == 0 && xik == 1)) {
          out.insert(Cycle{i, j, k});
        }
      }
    }
  }
  return out;
}

std::set<Cycle> prune_for_embedding(const std::set<Cycle>& cycles, int k) {
  if (k < 1) throw std::invalid_argument("prune_for_embedding needs k >= 1");
  std::set<Cycle> retained = cycles;
  std::map<CandidatePair, int> coverage;
  auto pairs_of = [](const Cycle& c) {
    return std::array<CandidatePair, 3>{
        CandidatePair{c.i, c.j}, CandidatePair{c.i, c.k}, CandidatePair{c.j, c.k}};
  };
  for (const Cycle& c : retained) {
    for (const auto& p : pairs_of(c)) ++coverage[p];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // snapshot: erasing while scanning the live set would skip entries
    const std::vector<Cycle> scan(retained.begin(), retained.end());
    for (const Cycle& c : scan) {
      bool removable = true;
      for (const auto& p : pairs_of(c)) {
        if (coverage[p] - 1 < k) {  // others covering p, at removal time
          removable = false;
          break;
        }
      }
      if (removable) {
        retained.erase(c);
        for (const auto& p : pairs_of(c)) --coverage[p];
        changed = true;
      }
    }
  }
  return retained;
}

std::set<Cycle> intersect_runs(const std::vector<std::set<Cycle>>& sets) {
  if (sets.empty()) throw std::invalid_argument("intersect_runs needs at least one set");
  std::set<Cycle> out = sets.front();
  for (std::size_t s = 1; s < sets.size() && !out.empty(); ++s) {
    std::set<Cycle> next;
    for (const Cycle& c : out) {
      if (sets[s].count(c)) next.insert(c);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace kemeny
