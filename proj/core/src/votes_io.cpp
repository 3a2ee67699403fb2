#include "kemeny/votes_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kemeny {

Dataset load_votes(std::istream& is, ListKind kind, WeightScheme pair_weight) {
  Dataset ds;
  ds.pair_weight = pair_weight;
  int header_n = 0;
  int max_index = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF input
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') {
      std::istringstream hs(line.substr(begin + 1));
      std::string kw;
      int n = 0;
      if (hs >> kw >> n && kw == "candidates:" && n > 0) header_n = n;
      continue;
    }
    Ranking vote;
    vote.kind = kind;
    std::string body = line.substr(begin);
    if (body.rfind("w=", 0) == 0) {
      const std::size_t semi = body.find(';');
      if (semi == std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": weight prefix is missing ';'");
      }
      try {
        vote.weight = std::stod(body.substr(2, semi - 2));
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad weight");
      }
      body = body.substr(semi + 1);
    }
    std::istringstream vs(body);
    int c = 0;
    while (vs >> c) {
      vote.order.push_back(c);
      max_index = std::max(max_index, c);
    }
    if (!vs.eof()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad candidate index");
    }
    if (vote.order.empty()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": empty vote");
    }
    ds.votes.push_back(std::move(vote));
  }
  ds.n = header_n > 0 ? header_n : max_index + 1;
  ds.validate();
  return ds;
}

Dataset load_votes_file(const std::string& path, ListKind kind, WeightScheme pair_weight) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open votes file: " + path);
  return load_votes(in, kind, pair_weight);
}

void save_votes(const Dataset& ds, std::ostream& os) {
  os << "# candidates: " << ds.n << "\n";
  for (const Ranking& vote : ds.votes) {
    if (vote.weight != 1.0) {
      os << "w=" << std::setprecision(17) << vote.weight << ";";
    }
    for (std::size_t i = 0; i < vote.order.size(); ++i) {
      if (i > 0 || vote.weight != 1.0) os << " ";
      os << vote.order[i];
    }
    os << "\n";
  }
}

void save_votes_file(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  save_votes(ds, out);
}

std::string file_hash_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file for hashing: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace kemeny
