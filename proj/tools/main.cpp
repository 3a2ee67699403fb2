// Command-line front door: generate datasets, run the solve pipelines and
// baselines, and emit comparison tables.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kemeny/baselines.hpp"
#include "kemeny/datagen.hpp"
#include "kemeny/distance.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/n2.hpp"
#include "kemeny/rng.hpp"
#include "kemeny/serialize.hpp"
#include "kemeny/solve.hpp"
#include "kemeny/votes_io.hpp"

using nlohmann::json;
using namespace kemeny;

namespace {

constexpr int kBruteForceCap = 9;

struct CommonFlags {
  std::string votes_file;
  std::string method = "iterative";
  std::string sampler;  // empty = auto
  long reads = 2500;
  std::uint64_t seed = 0;
  double epsilon = 0.5;
  std::string penalty_mode = "iterative";
  std::string parity = "auto";
  long stop_after_updates = -1;
  int double_check = 1;
  int prune_k = 0;
  std::string pr_strategy = "prhb";
  int pr_count = 0;
  int pr_min_gap = 2;
  std::string list_kind = "complete";
  std::string pair_weight = "uniform";
  std::string initial_penalty = "auto";
  bool oracle = false;
  long trials = 300;
  std::string output;
  std::string format = "json";
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_out(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(output);
  if (!os) throw std::invalid_argument("cannot open output file: " + output);
  os << text;
}

std::optional<Parity> parse_parity(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  throw CLI::ValidationError("--parity", "expected auto, odd or even");
}

Parity effective_parity(const Dataset& ds, const std::optional<Parity>& override) {
  if (override) return *override;
  return static_cast<long long>(ds.total_weight()) % 2 != 0 ? Parity::odd : Parity::even;
}

IterOptions options_from(const CommonFlags& f) {
  IterOptions opts;
  opts.max_cycle_updates = f.stop_after_updates;
  opts.parity = parse_parity(f.parity);
  opts.double_check = f.double_check;
  if (f.prune_k > 0) opts.prune_k = f.prune_k;
  opts.epsilon = f.epsilon;
  opts.seed = f.seed;
  opts.pr_min_gap = f.pr_min_gap;
  if (f.initial_penalty == "minimal") {
    opts.initial_penalty = InitialPenalty::minimal;
  } else if (f.initial_penalty == "bias-scaled") {
    opts.initial_penalty = InitialPenalty::bias_scaled;
  } else if (f.initial_penalty != "auto") {
    throw CLI::ValidationError("--initial-penalty", "expected auto, minimal or bias-scaled");
  }
  return opts;
}

Dataset load_dataset(const CommonFlags& f) {
  return load_votes_file(f.votes_file, list_kind_from_string(f.list_kind),
                         WeightScheme::parse(f.pair_weight));
}

// exact when the QUBO fits the cap, otherwise SA with the requested reads
std::unique_ptr<Sampler> make_sampler(const CommonFlags& f, long qubo_vars) {
  std::string choice = f.sampler;
  if (choice.empty()) {
    choice = qubo_vars <= ExactSampler::default_cap() ? "exact" : "sa";
  }
  if (choice == "exact") return std::make_unique<ExactSampler>();
  if (choice == "sa") {
    SaParams p;
    p.reads = f.reads;
    return std::make_unique<SaSampler>(p);
  }
  throw CLI::ValidationError("--sampler", "expected exact or sa");
}

json dataset_digest(const CommonFlags& f, const Dataset& ds) {
  return {{"n", ds.n},
          {"votes", ds.votes.size()},
          {"kind", to_string(ds.kind())},
          {"file_hash", file_hash_hex(f.votes_file)}};
}

json oracle_comparison(const Dataset& ds, const UpperTriBits& bits, double kt) {
  const OracleResult res = brute_force(ds, kBruteForceCap);
  return {{"min_kt", res.min_kt},
          {"num_optima", res.optima.size()},
          {"accuracy", accuracy(bits, res.optima)},
          {"kt_gap", kt - res.min_kt}};
}

int cmd_solve(const CommonFlags& f, const std::string& echo) {
  const auto start = std::chrono::steady_clock::now();
  const Dataset ds = load_dataset(f);

  json report;
  report["command"] = echo;
  report["method"] = f.method;
  report["dataset"] = dataset_digest(f, ds);
  report["seed"] = f.seed;

  std::optional<UpperTriBits> bits;
  double kt = 0.0;

  if (f.method == "brute-force") {
    const OracleResult res = brute_force(ds, kBruteForceCap);
    json optima = json::array();
    for (std::size_t i = 0; i < res.optima.size() && i < 20; ++i) {
      optima.push_back(res.optima[i].order);
    }
    report["result"] = {{"min_kt", res.min_kt},
                        {"num_optima", res.optima.size()},
                        {"optima", optima}};
  } else if (f.method == "kwiksort") {
    const PairMatrix pm = build_comparison(ds);
    json kts = json::array();
    double best_kt = 0.0;
    std::vector<int> best_order;
    for (long t = 0; t < f.trials; ++t) {
      const Ranking r = kwiksort(pm, child_seed(f.seed, static_cast<std::uint64_t>(t)));
      const double cur = cumulative_kt(ds, r);
      kts.push_back(cur);
      if (best_order.empty() || cur < best_kt) {
        best_kt = cur;
        best_order = r.order;
      }
    }
    report["result"] = {{"trials", f.trials},
                        {"kt_values", kts},
                        {"best_kt", best_kt},
                        {"best_ranking", best_order}};
    if (f.oracle || ds.n <= kBruteForceCap) {
      const OracleResult res = brute_force(ds, kBruteForceCap);
      report["oracle"] = {{"min_kt", res.min_kt},
                          {"num_optima", res.optima.size()},
                          {"kt_gap", best_kt - res.min_kt}};
    }
  } else if (f.method == "n2") {
    if (ds.kind() != ListKind::complete || !ds.unweighted() || !ds.pair_weight.is_uniform()) {
      throw CLI::ValidationError("--method", "the n2 encoding needs plain complete votes");
    }
    const N2Encoding enc = build_n2_qubo(build_comparison(ds),
                                         static_cast<int>(ds.votes.size()));
    auto sampler = make_sampler(f, enc.qubo.num_vars);
    const SampleSet ss = sampler->sample(enc.qubo, child_seed(f.seed, 1));
    std::optional<Ranking> decoded;
    double energy = 0.0;
    long num_occ = 0;
    for (const SampleRecord& rec : ss.records) {
      decoded = enc.decode(rec.config);
      if (decoded) {
        energy = rec.energy;
        num_occ = rec.num_occ;
        break;
      }
    }
    if (!decoded) {
      report["result"] = {{"decoded", false}};
      report["wall_clock_s"] = elapsed_s(start);
      write_out(report.dump(2), f.output);
      std::cerr << "n2: no feasible configuration in the sample set\n";
      return 3;
    }
    Solution s;
    s.ranking = *decoded;
    s.bits = represent(*decoded);
    s.cumulative_kt = cumulative_kt(ds, *decoded);
    s.normalized_kt = normalized_kt(ds, *decoded);
    s.energy = energy;
    s.num_occ = num_occ;
    s.iterations = 1;
    s.converged = true;
    s.seed = f.seed;
    s.sampler = sampler->name();
    report["result"] = json::parse(to_json_string(s));
    bits = s.bits;
    kt = s.cumulative_kt;
  } else if (f.method == "base" || f.method == "iterative" || f.method == "pair-removal") {
    auto sampler = make_sampler(f, num_pairs(ds.n));
    Solution s;
    if (f.method == "base" || f.penalty_mode == "minmax") {
      s = solve_base(ds, *sampler, f.epsilon, parse_parity(f.parity), f.seed);
    } else if (f.method == "pair-removal") {
      if (f.pr_strategy != "prhb" && f.pr_strategy != "promega") {
        throw CLI::ValidationError("--pr-strategy", "expected prhb or promega");
      }
      const PrStrategy strategy =
          f.pr_strategy == "promega" ? PrStrategy::promega : PrStrategy::prhb;
      s = solve_pair_removal(ds, *sampler, strategy, f.pr_count, options_from(f));
    } else {
      s = solve_iterative(ds, *sampler, options_from(f));
    }
    report["result"] = json::parse(to_json_string(s));
    bits = s.bits;
    kt = s.cumulative_kt;
  } else {
    throw CLI::ValidationError(
        "--method", "expected base, iterative, pair-removal, kwiksort, brute-force or n2");
  }

  if (bits && (f.oracle || ds.n <= kBruteForceCap)) {
    report["oracle"] = oracle_comparison(ds, *bits, kt);
  }
  report["wall_clock_s"] = elapsed_s(start);
  write_out(report.dump(2), f.output);
  return 0;
}

int cmd_generate(GenSpec spec, const std::string& fixture, const std::string& output) {
  Dataset ds;
  if (!fixture.empty()) {
    if (fixture != "appendix-e") {
      throw CLI::ValidationError("--fixture", "the only known fixture is appendix-e");
    }
    ds = appendix_e_dataset();
  } else if (spec.mode == GenSpec::Mode::simplified) {
    ds = gen_simplified(spec).dataset;
  } else {
    ds = gen_synthetic(spec);
  }
  std::ostringstream os;
  save_votes(ds, os);
  write_out(os.str(), output);
  std::cerr << "wrote " << ds.votes.size() << " votes over " << ds.n << " candidates ("
            << to_string(ds.kind()) << ")\n";
  return 0;
}

int cmd_dump_qubo(const CommonFlags& f) {
  const Dataset ds = load_dataset(f);
  const PairMatrix pm = build_comparison(ds);
  const BiasMatrix b = bias_of(pm);
  Qubo q;
  if (f.method == "n2") {
    q = build_n2_qubo(pm, static_cast<int>(ds.votes.size())).qubo;
  } else if (f.method == "base") {
    const Parity parity = effective_parity(ds, parse_parity(f.parity));
    q = build_base_qubo(b, select_penalty(b, ds.total_weight(), parity, f.epsilon));
  } else if (f.method == "iterative") {
    const Parity parity = effective_parity(ds, parse_parity(f.parity));
    PenaltyLedger ledger;
    const double floor = (parity == Parity::odd ? 1.0 : 0.0) + f.epsilon;
    for (const Cycle& c : initial_cycles(omega(b), parity)) ledger[c] = floor;
    q = build_iterative_qubo(b, ledger);
  } else {
    throw CLI::ValidationError("--method", "dump-qubo supports base, iterative or n2");
  }
  std::ostringstream os;
  dump_qubo(q, os);
  write_out(os.str(), f.output);
  return 0;
}

struct CompareRow {
  std::string method;
  int run = 0;
  std::uint64_t seed = 0;
  double kt = 0.0;
  long count = 0;  // iterations or trials
  double wall_clock_s = 0.0;
};

int cmd_compare(const CommonFlags& f, int im_runs, const std::string& echo) {
  const Dataset ds = load_dataset(f);
  auto sampler = make_sampler(f, num_pairs(ds.n));

  std::vector<CompareRow> rows;
  std::vector<double> im_iteration_kts;  // every iteration of every run
  std::vector<double> im_run_minima;

  for (int run = 0; run < im_runs; ++run) {
    IterOptions opts = options_from(f);
    opts.seed = child_seed(f.seed, 1000 + static_cast<std::uint64_t>(run));
    const auto start = std::chrono::steady_clock::now();
    const Solution s = solve_iterative(ds, *sampler, opts);
    const double secs = elapsed_s(start);
    double run_min = s.cumulative_kt;
    for (const IterationTrace& t : s.trace) {
      im_iteration_kts.push_back(t.best_kt);
      run_min = std::min(run_min, t.best_kt);
    }
    im_run_minima.push_back(run_min);
    rows.push_back(
        {"iterative", run + 1, opts.seed, run_min, static_cast<long>(s.iterations), secs});
  }

  const PairMatrix pm = build_comparison(ds);
  std::vector<double> ks_kts;
  const auto ks_start = std::chrono::steady_clock::now();
  for (long t = 0; t < f.trials; ++t) {
    const Ranking r =
        kwiksort(pm, child_seed(f.seed, 500000 + static_cast<std::uint64_t>(t)));
    ks_kts.push_back(cumulative_kt(ds, r));
  }
  const double ks_secs = elapsed_s(ks_start);
  const double ks_best =
      ks_kts.empty() ? 0.0 : *std::min_element(ks_kts.begin(), ks_kts.end());
  rows.push_back({"kwiksort", 1, f.seed, ks_best, f.trials, ks_secs});

  auto mean = [](const std::vector<double>& v) {
    return v.empty() ? 0.0
                     : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  const double avg_kt_im = mean(im_iteration_kts);
  const double avg_run_min = mean(im_run_minima);
  const double min_min =
      im_run_minima.empty() ? 0.0
                            : *std::min_element(im_run_minima.begin(), im_run_minima.end());

  // mean KwikSort trials (and time) until one draw lands strictly below a
  // threshold, estimated as trials/successes; "-" when it never happened
  const double per_trial_s = f.trials > 0 ? ks_secs / static_cast<double>(f.trials) : 0.0;
  auto beat = [&](double threshold) -> std::pair<std::string, std::string> {
    long successes = 0;
    for (double v : ks_kts) {
      if (v < threshold) ++successes;
    }
    if (successes == 0) return {"-", "-"};
    const double mean_trials =
        static_cast<double>(f.trials) / static_cast<double>(successes);
    std::ostringstream a;
    a << mean_trials;
    std::ostringstream b;
    b << mean_trials * per_trial_s;
    return {a.str(), b.str()};
  };
  const auto [beat_avg_trials, beat_avg_time] = beat(avg_kt_im);
  const auto [beat_avg_min_trials, beat_avg_min_time] = beat(avg_run_min);
  const auto [beat_min_trials, beat_min_time] = beat(min_min);

  std::ostringstream os;
  if (f.format == "csv") {
    os << "record,method,run,seed,kt,count,wall_clock_s\n";
    for (const CompareRow& r : rows) {
      os << "run," << r.method << "," << r.run << "," << r.seed << "," << r.kt << ","
         << r.count << "," << r.wall_clock_s << "\n";
    }
    os << "stat,avg_kt_im,,," << avg_kt_im << ",,\n";
    os << "stat,avg_run_min_kt_im,,," << avg_run_min << ",,\n";
    os << "stat,min_kt_im,,," << min_min << ",,\n";
    os << "stat,ks_best_kt,,," << ks_best << ",,\n";
    os << "stat,ks_trials_beat_avg,,," << beat_avg_trials << ",,\n";
    os << "stat,ks_time_beat_avg_s,,," << beat_avg_time << ",,\n";
    os << "stat,ks_trials_beat_avg_min,,," << beat_avg_min_trials << ",,\n";
    os << "stat,ks_time_beat_avg_min_s,,," << beat_avg_min_time << ",,\n";
    os << "stat,ks_trials_beat_min,,," << beat_min_trials << ",,\n";
    os << "stat,ks_time_beat_min_s,,," << beat_min_time << ",,\n";
  } else {
    json jrows = json::array();
    for (const CompareRow& r : rows) {
      jrows.push_back({{"method", r.method},
                       {"run", r.run},
                       {"seed", r.seed},
                       {"kt", r.kt},
                       {"count", r.count},
                       {"wall_clock_s", r.wall_clock_s}});
    }
    json out = {{"command", echo},
                {"dataset", dataset_digest(f, ds)},
                {"runs", jrows},
                {"summary",
                 {{"avg_kt_im", avg_kt_im},
                  {"avg_run_min_kt_im", avg_run_min},
                  {"min_kt_im", min_min},
                  {"ks_best_kt", ks_best},
                  {"ks_trials_beat_avg", beat_avg_trials},
                  {"ks_time_beat_avg_s", beat_avg_time},
                  {"ks_trials_beat_avg_min", beat_avg_min_trials},
                  {"ks_time_beat_avg_min_s", beat_avg_min_time},
                  {"ks_trials_beat_min", beat_min_trials},
                  {"ks_time_beat_min_s", beat_min_time}}}};
    os << out.dump(2);
  }
  write_out(os.str(), f.output);
  return 0;
}

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_method = true) {
  cmd->add_option("votes", f.votes_file, "votes file")->required();
  if (with_method) {
    cmd->add_option("--method,-m", f.method,
                    "base | iterative | pair-removal | kwiksort | brute-force | n2");
  }
  cmd->add_option("--sampler", f.sampler, "exact | sa (default: exact when it fits)");
  cmd->add_option("--reads", f.reads, "SA reads per sample");
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--epsilon", f.epsilon, "penalty epsilon");
  cmd->add_option("--penalty-mode", f.penalty_mode, "minmax | iterative");
  cmd->add_option("--parity", f.parity, "auto | odd | even");
  cmd->add_option("--stop-after-updates", f.stop_after_updates,
                  "halt after N cycle updates (-1 = run to convergence)");
  cmd->add_option("--double-check", f.double_check, "sampler runs per iteration");
  cmd->add_option("--prune-k", f.prune_k, "prune seeded cycles covered >= k times");
  cmd->add_option("--pr-strategy", f.pr_strategy, "prhb | promega");
  cmd->add_option("--pr-count", f.pr_count, "pairs to remove");
  cmd->add_option("--pr-min-gap", f.pr_min_gap, "minimum position gap for promega");
  cmd->add_option("--list-kind", f.list_kind, "complete | partial | ktop");
  cmd->add_option("--pair-weight", f.pair_weight, "uniform | position:<p> | distance");
  cmd->add_option("--initial-penalty", f.initial_penalty, "auto | minimal | bias-scaled");
  cmd->add_flag("--oracle", f.oracle, "always compare against brute force");
  cmd->add_option("--trials", f.trials, "kwiksort trials");
  cmd->add_option("--output,-o", f.output, "output file (default stdout)");
  cmd->add_option("--format", f.format, "json | csv (compare only)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kemeny consensus-ranking toolkit: QUBO encodings, samplers and baselines"};
  app.require_subcommand(1);

  GenSpec spec;
  std::string gen_mode = "synthetic";
  std::string gen_kind = "complete";
  std::string fixture;
  std::string gen_output;
  CLI::App* generate = app.add_subcommand("generate", "write a synthetic votes file");
  generate->add_option("--mode", gen_mode, "synthetic | simplified");
  generate->add_option("--n", spec.n, "candidate count");
  generate->add_option("--votes", spec.votes, "vote count (default 11)");
  generate->add_option("--seed", spec.seed, "generator seed");
  generate->add_option("--min-sublists", spec.min_sublists, "simplified: minimum sublists");
  generate->add_option("--kind", gen_kind, "complete | partial | ktop");
  generate->add_option("--min-len", spec.min_len, "shortest vote for partial/ktop kinds");
  generate->add_option("--fixture", fixture, "embedded dataset name (appendix-e)");
  generate->add_option("--output,-o", gen_output, "output file (default stdout)");

  CommonFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "run a pipeline on a votes file");
  add_common_flags(solve, solve_flags);

  CommonFlags compare_flags;
  int im_runs = 5;
  CLI::App* compare =
      app.add_subcommand("compare", "iterative method vs KwikSort on one dataset");
  add_common_flags(compare, compare_flags, /*with_method=*/false);
  compare->add_option("--im-runs", im_runs, "iterative-method evaluations");

  CommonFlags dump_flags;
  CLI::App* dump = app.add_subcommand("dump-qubo", "write a QUBO coefficient dump");
  add_common_flags(dump, dump_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      if (fixture.empty()) {
        if (spec.n < 1) throw CLI::ValidationError("--n", "candidate count is required");
        if (gen_mode != "simplified" && gen_mode != "synthetic") {
          throw CLI::ValidationError("--mode", "expected synthetic or simplified");
        }
        spec.mode = gen_mode == "simplified" ? GenSpec::Mode::simplified
                                             : GenSpec::Mode::synthetic;
        spec.kind = list_kind_from_string(gen_kind);
      }
      return cmd_generate(spec, fixture, gen_output);
    }
    std::string echo;
    for (int a = 0; a < argc; ++a) {
      if (a > 0) echo += " ";
      echo += argv[a];
    }
    if (solve->parsed()) return cmd_solve(solve_flags, echo);
    if (compare->parsed()) return cmd_compare(compare_flags, im_runs, echo);
    if (dump->parsed()) return cmd_dump_qubo(dump_flags);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const PairRemovalExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const too_large_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
