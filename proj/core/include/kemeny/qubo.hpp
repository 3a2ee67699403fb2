#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>

namespace kemeny {

/// Sparse QUBO: minimize offset + sum_i linear[i] x_i
/// + sum_{i<j} quadratic[(i,j)] x_i x_j over binary x.
/// Coefficients merge additively on duplicate keys.
struct Qubo {
  int num_vars = 0;
  std::map<int, double> linear;
  std::map<std::pair<int, int>, double> quadratic;  // keys with first < second
  double offset = 0.0;

  void add_linear(int v, double c);
  void add_quadratic(int u, int v, double c);  // u != v, any order

  double energy(std::span<const std::uint8_t> config) const;

  double max_abs_coeff() const;
  double min_nonzero_abs_coeff() const;
  double coeff_mass() const;  // sum of |coefficients|

  friend bool operator==(const Qubo&, const Qubo&) = default;
};

/// Text dump: header "# vars: N offset: F", then one "i j coeff" line per
/// term (i == j for linear). For cross-checking against external solvers.
void dump_qubo(const Qubo& q, std::ostream& os);
Qubo parse_qubo(std::istream& is);

}  // namespace kemeny
