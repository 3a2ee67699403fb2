#include "kemeny/serialize.hpp"

#include <json.hpp>

namespace kemeny {

namespace {

using nlohmann::json;

json bits_to_json(const UpperTriBits& x) {
  json arr = json::array();
  for (std::int8_t b : x.bits) arr.push_back(static_cast<int>(b));
  return arr;
}

json ledger_to_json(const PenaltyLedger& ledger) {
  json arr = json::array();
  for (const auto& [c, p] : ledger) {
    arr.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"penalty", p}});
  }
  return arr;
}

json solution_to_json(const Solution& s) {
  json trace = json::array();
  for (const IterationTrace& t : s.trace) {
    trace.push_back({{"iteration", t.iteration},
                     {"ledger_size", t.ledger_size},
                     {"new_cycles", t.new_cycles},
                     {"bumped_cycles", t.bumped_cycles},
                     {"best_energy", t.best_energy},
                     {"best_kt", t.best_kt}});
  }
  return {{"ranking", s.ranking.order},
          {"bits", bits_to_json(s.bits)},
          {"cumulative_kt", s.cumulative_kt},
          {"normalized_kt", s.normalized_kt},
          {"energy", s.energy},
          {"num_occ", s.num_occ},
          {"iterations", s.iterations},
          {"ledger", ledger_to_json(s.ledger)},
          {"converged", s.converged},
          {"seed", s.seed},
          {"sampler", s.sampler},
          {"trace", trace}};
}

}  // namespace

std::string to_json_string(const Solution& s, int indent) {
  return solution_to_json(s).dump(indent);
}

std::string to_json_string(const SampleSet& ss, int indent) {
  json records = json::array();
  for (const SampleRecord& r : ss.records) {
    json cfg = json::array();
    for (std::uint8_t b : r.config) cfg.push_back(static_cast<int>(b));
    records.push_back({{"config", cfg}, {"energy", r.energy}, {"num_occ", r.num_occ}});
  }
  json out = {{"backend", ss.backend},
              {"reads", ss.reads},
              {"seed", ss.seed},
              {"records", records}};
  return out.dump(indent);
}

}  // namespace kemeny
