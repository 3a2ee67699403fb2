#include "kemeny/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kemeny/rng.hpp"

namespace kemeny {

namespace {

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.votes < 1) throw std::invalid_argument("generator needs votes >= 1");
  if (spec.kind != ListKind::complete && (spec.min_len < 1 || spec.min_len > spec.n)) {
    throw std::invalid_argument("min_len must lie in [1, n]");
  }
}

}  // namespace

Dataset gen_synthetic(const GenSpec& spec) {
  check_spec(spec);
  Dataset ds;
  ds.n = spec.n;
  ds.votes.reserve(spec.votes);
  for (int v = 0; v < spec.votes; ++v) {
    Rng rng(child_seed(spec.seed, static_cast<std::uint64_t>(v)));
    std::vector<int> order = identity(spec.n);
    rng.shuffle(order);
    ds.votes.push_back(complete_ranking(std::move(order)));
  }
  if (spec.kind != ListKind::complete) {
    return truncate_votes(ds, spec.kind, spec.min_len, child_seed(spec.seed, 0x77000000ULL));
  }
  ds.validate();
  return ds;
}

SimplifiedResult gen_simplified(const GenSpec& spec) {
  check_spec(spec);
  if (spec.min_sublists < 3) throw std::invalid_argument("simplified mode needs min_sublists >= 3");
  if (spec.min_sublists > spec.n) throw std::invalid_argument("min_sublists cannot exceed n");
  SimplifiedResult out;
  out.dataset.n = spec.n;
  out.dataset.votes.reserve(spec.votes);
  out.cuts.reserve(spec.votes);
  for (int v = 0; v < spec.votes; ++v) {
    Rng rng(child_seed(spec.seed, static_cast<std::uint64_t>(v)));
    // distinct cut points in [1, n-1]; count uniform in [min_sublists-1, n-1]
    const int lo = spec.min_sublists - 1;
    const int hi = spec.n - 1;
    const int ncuts = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    std::vector<int> positions(spec.n - 1);
    std::iota(positions.begin(), positions.end(), 1);
    rng.shuffle(positions);
    std::vector<int> cuts(positions.begin(), positions.begin() + ncuts);
    std::sort(cuts.begin(), cuts.end());

    std::vector<int> order = identity(spec.n);
    int start = 0;
    for (std::size_t c = 0; c <= cuts.size(); ++c) {
      const int end = c < cuts.size() ? cuts[c] : spec.n;
      std::vector<int> block(order.begin() + start, order.begin() + end);
      rng.shuffle(block);
      std::copy(block.begin(), block.end(), order.begin() + start);
      start = end;
    }
    out.dataset.votes.push_back(complete_ranking(std::move(order)));
    out.cuts.push_back(std::move(cuts));
  }
  out.dataset.validate();
  return out;
}

Dataset truncate_votes(const Dataset& ds, ListKind kind, int min_len, std::uint64_t seed) {
  if (kind == ListKind::complete) {
    throw std::invalid_argument("truncate_votes targets partial or ktop kinds");
  }
  if (min_len < 1 || min_len > ds.n) throw std::invalid_argument("min_len must lie in [1, n]");
  Dataset out;
  out.n = ds.n;
  out.pair_weight = ds.pair_weight;
  out.votes.reserve(ds.votes.size());
  for (std::size_t v = 0; v < ds.votes.size(); ++v) {
    Rng rng(child_seed(seed, v));
    const int len = min_len + static_cast<int>(rng.below(static_cast<std::uint64_t>(ds.n - min_len + 1)));
    Ranking vote = ds.votes[v];
    vote.order.resize(len);
    vote.kind = kind;
    out.votes.push_back(std::move(vote));
  }
  out.validate();
  return out;
}

Dataset appendix_e_dataset() {
  // embedded verbatim: 5 candidates, 11 votes, most-preferred first
  static const std::vector<std::vector<int>> votes = {
      {0, 2, 1, 3, 4}, {2, 0, 4, 1, 3}, {0, 1, 4, 2, 3}, {3, 0, 2, 1, 4},
      {2, 1, 3, 0, 4}, {2, 3, 0, 1, 4}, {0, 1, 2, 4, 3}, {3, 4, 0, 2, 1},
      {1, 4, 3, 0, 2}, {2, 3, 0, 4, 1}, {4, 3, 2, 0, 1},
  };
  return make_dataset(5, votes);
}

}  // namespace kemeny
