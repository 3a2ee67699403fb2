#include "kemeny/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kemeny {

void Qubo::add_linear(int v, double c) {
  if (v < 0 || v >= num_vars) throw std::invalid_argument("linear index out of range");
  linear[v] += c;
}

void Qubo::add_quadratic(int u, int v, double c) {
  if (u == v) throw std::invalid_argument("no self-pairs in the quadratic term");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= num_vars) throw std::invalid_argument("quadratic index out of range");
  quadratic[{u, v}] += c;
}

double Qubo::energy(std::span<const std::uint8_t> config) const {
  if (static_cast<int>(config.size()) != num_vars) {
    throw std::invalid_argument("configuration length does not match num_vars");
  }
  double e = offset;
  for (const auto& [v, c] : linear) {
    if (config[v]) e += c;
  }
  for (const auto& [uv, c] : quadratic) {
    if (config[uv.first] && config[uv.second]) e += c;
  }
  return e;
}

double Qubo::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [v, c] : linear) m = std::max(m, std::abs(c));
  for (const auto& [uv, c] : quadratic) m = std::max(m, std::abs(c));
  return m;
}

double Qubo::min_nonzero_abs_coeff() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [v, c] : linear) {
    if (c != 0.0) m = std::min(m, std::abs(c));
  }
  for (const auto& [uv, c] : quadratic) {
    if (c != 0.0) m = std::min(m, std::abs(c));
  }
  return std::isinf(m) ? 0.0 : m;
}

double Qubo::coeff_mass() const {
  double m = 0.0;
  for (const auto& [v, c] : linear) m += std::abs(c);
  for (const auto& [uv, c] : quadratic) m += std::abs(c);
  return m;
}

void dump_qubo(const Qubo& q, std::ostream& os) {
  os.precision(17);
  os << "# vars: " << q.num_vars << " offset: " << q.offset << "\n";
  for (const auto& [v, c] : q.linear) {
    os << v << " " << v << " " << c << "\n";
  }
  for (const auto& [uv, c] : q.quadratic) {
    os << uv.first << " " << uv.second << " " << c << "\n";
  }
}

Qubo parse_qubo(std::istream& is) {
  Qubo q;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream hs(line);
      std::string hash, vars_kw, offset_kw;
      int nv = 0;
      double off = 0.0;
      if (hs >> hash >> vars_kw >> nv >> offset_kw >> off && vars_kw == "vars:") {
        q.num_vars = nv;
        q.offset = off;
        header_seen = true;
      }
      continue;
    }
    std::istringstream ls(line);
    int i = 0;
    int j = 0;
    double c = 0.0;
    if (!(ls >> i >> j >> c)) throw std::invalid_argument("bad qubo line: " + line);
    if (i == j) {
      q.add_linear(i, c);
    } else {
      q.add_quadratic(i, j, c);
    }
  }
  if (!header_seen) throw std::invalid_argument("qubo dump is missing its header");
  return q;
}

}  // namespace kemeny
