#include "kemeny/ranking.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace kemeny {

std::string to_string(ListKind k) {
  switch (k) {
    case ListKind::complete: return "complete";
    case ListKind::partial: return "partial";
    case ListKind::ktop: return "ktop";
  }
  return "complete";
}

ListKind list_kind_from_string(const std::string& s) {
  if (s == "complete") return ListKind::complete;
  if (s == "partial") return ListKind::partial;
  if (s == "ktop") return ListKind::ktop;
  throw std::invalid_argument("unknown list kind: " + s);
}

double WeightScheme::at(int pos_i, int pos_j) const {
  switch (kind) {
    case Kind::uniform: return 1.0;
    case Kind::position: return 1.0 / std::pow(pos_i + pos_j, p);
    case Kind::distance: return std::abs(pos_i - pos_j);
  }
  return 1.0;
}

void WeightScheme::validate() const {
  if (kind == Kind::position && p <= 0.0) {
    throw std::invalid_argument("position weight scheme needs p > 0");
  }
}

std::string WeightScheme::label() const {
  switch (kind) {
    case Kind::uniform: return "uniform";
    case Kind::position: return "position:" + std::to_string(p);
    case Kind::distance: return "distance";
  }
  return "uniform";
}

WeightScheme WeightScheme::parse(const std::string& s) {
  if (s == "uniform") return uniform();
  if (s == "distance") return distance();
  if (s.rfind("position", 0) == 0) {
    double p = 1.0;
    if (auto colon = s.find(':'); colon != std::string::npos) {
      p = std::strtod(s.c_str() + colon + 1, nullptr);
    }
    WeightScheme ws = position(p);
    ws.validate();
    return ws;
  }
  throw std::invalid_argument("unknown pair weight scheme: " + s);
}

void Dataset::validate() const {
  if (n < 1) throw std::invalid_argument("dataset needs at least one candidate");
  if (votes.empty()) throw std::invalid_argument("dataset needs at least one vote");
  pair_weight.validate();
  const ListKind shared = votes.front().kind;
  std::vector<char> seen(n);
  for (const Ranking& vote : votes) {
    if (vote.kind != shared) {
      throw std::invalid_argument("all votes must share one list kind");
    }
    if (!(vote.weight > 0.0)) {
      throw std::invalid_argument("vote weights must be positive");
    }
    if (vote.kind == ListKind::complete && vote.size() != n) {
      throw std::invalid_argument("complete votes must list all candidates");
    }
    if (vote.size() > n) {
      throw std::invalid_argument("vote longer than the candidate count");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : vote.order) {
      if (c < 0 || c >= n) throw std::invalid_argument("candidate index out of range");
      if (seen[c]) throw std::invalid_argument("duplicate candidate in a vote");
      seen[c] = 1;
    }
  }
}

double Dataset::total_weight() const {
  double t = 0.0;
  for (const Ranking& vote : votes) t += vote.weight;
  return t;
}

bool Dataset::unweighted() const {
  for (const Ranking& vote : votes) {
    if (vote.weight != 1.0) return false;
  }
  return true;
}

bool Dataset::plain() const {
  return kind() == ListKind::complete && unweighted() && pair_weight.is_uniform();
}

Dataset make_dataset(int n, const std::vector<std::vector<int>>& orders) {
  Dataset ds;
  ds.n = n;
  ds.votes.reserve(orders.size());
  for (const auto& o : orders) ds.votes.push_back(complete_ranking(o));
  ds.validate();
  return ds;
}

}  // namespace kemeny
