#pragma once

#include <string>
#include <vector>

namespace kemeny {

enum class ListKind { complete, partial, ktop };

std::string to_string(ListKind k);
ListKind list_kind_from_string(const std::string& s);

/// One vote: candidate indices, most-preferred first. Partial and k-top
/// votes list a subset of the candidates; k-top additionally means every
/// listed candidate is preferred to every unlisted one.
struct Ranking {
  std::vector<int> order;
  ListKind kind = ListKind::complete;
  double weight = 1.0;  // list weight (beta)

  int size() const { return static_cast<int>(order.size()); }
};

inline Ranking complete_ranking(std::vector<int> order, double weight = 1.0) {
  return Ranking{std::move(order), ListKind::complete, weight};
}

/// Per-pair position weight alpha(i, j). Positions are 1-based.
struct WeightScheme {
  enum class Kind { uniform, position, distance };

  Kind kind = Kind::uniform;
  double p = 1.0;  // decay exponent, position kind only

  /// Weight for a pair sitting at 1-based positions (pos_i, pos_j).
  double at(int pos_i, int pos_j) const;
  bool is_uniform() const { return kind == Kind::uniform; }

  void validate() const;  // throws std::invalid_argument on p <= 0
  std::string label() const;

  static WeightScheme uniform() { return {}; }
  static WeightScheme position(double p) { return {Kind::position, p}; }
  static WeightScheme distance() { return {Kind::distance, 1.0}; }
  /// Parses "uniform", "position:<p>" or "distance".
  static WeightScheme parse(const std::string& s);
};

/// A multiset of votes over n candidates, all sharing one list kind,
/// with an optional per-pair position-weight scheme.
struct Dataset {
  int n = 0;
  std::vector<Ranking> votes;
  WeightScheme pair_weight{};

  void validate() const;  // throws std::invalid_argument
  ListKind kind() const { return votes.empty() ? ListKind::complete : votes.front().kind; }
  double total_weight() const;
  bool unweighted() const;  // every vote has weight 1
  /// True for the plain case: complete votes, unit weights, uniform alpha.
  bool plain() const;
};

/// Convenience constructor for complete unit-weight datasets.
Dataset make_dataset(int n, const std::vector<std::vector<int>>& orders);

}  // namespace kemeny
