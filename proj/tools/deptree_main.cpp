// deptree: dependency tree statistics with exact arithmetic.
//
// Exit codes: 0 success, 1 I/O or input-format error, 2 no sentences to
// report, 3 invariant violation, 64 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deptree/arrangement.hpp"
#include "deptree/bounds.hpp"
#include "deptree/conllu.hpp"
#include "deptree/enumerate.hpp"
#include "deptree/oracles.hpp"
#include "deptree/random_baseline.hpp"
#include "deptree/report.hpp"
#include "deptree/rng.hpp"
#include "deptree/tree.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUsage = 64;

std::string basename_of(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

/// Routes primary output to a file when requested, else to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string input;
  std::string format = "csv";
  std::string input_format = "auto";
  std::string output;
  int min_n = 2;
  bool validate = false;
  int jobs = 1;
};

void emit_reports(const AnalyzeOptions& opt, std::ostream& out,
                  const std::vector<deptree::SentenceReport>* single,
                  deptree::ConlluReader* reader, deptree::CorpusSummary& summary) {
  deptree::Aggregator agg;
  const std::string input_name = basename_of(opt.input);

  if (opt.format == "csv") {
    out << "# " << deptree::kReportSchema << " command=analyze input=" << input_name
        << " format=csv min_n=" << opt.min_n << " validate=" << (opt.validate ? 1 : 0)
        << "\n";
    out << deptree::report_csv_header() << "\n";
  } else {
    ordered_json run;
    run["type"] = "run";
    run["schema"] = deptree::kReportSchema;
    run["command"] = "analyze";
    run["input"] = input_name;
    run["format"] = opt.format;
    run["min_n"] = opt.min_n;
    run["validate"] = opt.validate;
    out << run.dump() << "\n";
  }

  const auto sink = [&](const deptree::SentenceReport& rep) {
    if (opt.validate) {
      if (const auto violation = deptree::report_violation(rep))
        throw ValidationFailure("sentence " + rep.id + ": " + *violation);
    }
    agg.add(rep);
    if (opt.format == "csv") out << deptree::report_csv_row(rep) << "\n";
    else out << deptree::report_json(rep).dump() << "\n";
  };

  if (reader != nullptr) {
    summary = deptree::analyze_corpus(*reader, opt.min_n, sink);
  } else {
    summary.blocks = 1;
    summary.accepted = 1;
    for (const auto& rep : *single) {
      if (rep.n < opt.min_n) {
        ++summary.below_min_n;
        continue;
      }
      ++summary.reported;
      sink(rep);
    }
  }

  const auto rows = agg.rows();
  if (opt.format == "csv") {
    out << "\n# aggregates by sentence length\n";
    out << deptree::aggregate_csv_header() << "\n";
    for (const auto& row : rows) out << deptree::aggregate_csv_row(row) << "\n";
  } else {
    for (const auto& row : rows) out << deptree::aggregate_json(row).dump() << "\n";
  }
}

int run_analyze(const AnalyzeOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "error: cannot open input file: " << opt.input << "\n";
    return kExitIo;
  }
  const bool conllu = opt.input_format == "conllu" ||
                      (opt.input_format == "auto" &&
                       std::filesystem::path(opt.input).extension() == ".conllu");

  deptree::CorpusSummary summary;
  try {
    Output output(opt.output);
    if (conllu) {
      deptree::ConlluReader reader(in);
      emit_reports(opt, output.out(), nullptr, &reader, summary);
      for (const auto& skip : reader.skips()) std::cerr << deptree::skip_json(skip).dump() << "\n";
    } else {
      const deptree::EdgeListInput parsed = deptree::parse_edgelist(in);
      std::vector<deptree::SentenceReport> single;
      if (parsed.tree.vertex_count() >= 2) {
        const auto arr = parsed.arrangement
                             ? *parsed.arrangement
                             : deptree::LinearArrangement::identity(parsed.tree.vertex_count());
        single.push_back(deptree::analyze_sentence(basename_of(opt.input), parsed.tree, arr));
      } else {
        summary.below_min_n = 1;  // valid single-vertex tree, below any min_n
      }
      emit_reports(opt, output.out(), &single, nullptr, summary);
    }
  } catch (const ValidationFailure& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const deptree::ParseError& e) {
    std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const deptree::TreeError& e) {
    std::cerr << "error: " << opt.input << ": " << to_cstring(e.defect()) << ": " << e.what()
              << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cerr << deptree::summary_json(summary).dump() << "\n";
  return summary.reported == 0 ? kExitEmpty : kExitOk;
}

// ----------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string input;
  std::string output;
};

int run_bounds(const BoundsOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "error: cannot open input file: " << opt.input << "\n";
    return kExitIo;
  }
  try {
    Output output(opt.output);
    const deptree::EdgeListInput parsed = deptree::parse_edgelist(in);
    const int n = parsed.tree.vertex_count();
    if (n == 1) {
      ordered_json j;
      j["schema"] = deptree::kReportSchema;
      j["n"] = 1;
      j["note"] = "single vertex: length, crossing and bound statistics are undefined";
      output.out() << j.dump() << "\n";
      return kExitOk;
    }
    const auto arr =
        parsed.arrangement ? *parsed.arrangement : deptree::LinearArrangement::identity(n);
    const auto rep = deptree::analyze_sentence(basename_of(opt.input), parsed.tree, arr);
    ordered_json j = deptree::bounds_json(rep);
    j["arrangement"] = arr.positions();
    output.out() << j.dump() << "\n";
    return kExitOk;
  } catch (const deptree::ParseError& e) {
    std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const deptree::TreeError& e) {
    std::cerr << "error: " << opt.input << ": " << to_cstring(e.defect()) << ": " << e.what()
              << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

// --------------------------------------------------------------- simulate

struct SimulateOptions {
  std::string input;
  std::string output;
  long long trials = 10000;
  std::uint64_t seed = 42;
  int jobs = 1;
};

int run_simulate(const SimulateOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "error: cannot open input file: " << opt.input << "\n";
    return kExitIo;
  }
  try {
    Output output(opt.output);
    const deptree::EdgeListInput parsed = deptree::parse_edgelist(in);
    const int n = parsed.tree.vertex_count();
    if (n < 2) {
      std::cerr << "error: simulation needs a tree with n >= 2\n";
      return kExitIo;
    }
    const auto mc = deptree::monte_carlo_baseline(parsed.tree, opt.trials, opt.seed, opt.jobs);
    const auto base = deptree::analytic_baseline(n);

    ordered_json j;
    j["type"] = "simulate";
    j["schema"] = deptree::kReportSchema;
    j["input"] = basename_of(opt.input);
    j["n"] = n;
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
    j["jobs"] = opt.jobs;
    ordered_json emp;
    emp["mean_d"] = deptree::to_string(mc.mean_mean_d());
    emp["mean_d_dec"] = deptree::to_decimal(mc.mean_mean_d());
    emp["se_mean_d"] = mc.se_mean_d();
    emp["mean_C"] = deptree::to_string(mc.mean_crossings());
    emp["mean_C_dec"] = deptree::to_decimal(mc.mean_crossings());
    emp["se_C"] = mc.se_crossings();
    emp["max_C"] = mc.max_crossings;
    j["empirical"] = emp;
    ordered_json ana;
    ana["E_d"] = deptree::to_string(base.E_d);
    ana["E_d2"] = deptree::to_string(base.E_d2);
    ana["V_d"] = deptree::to_string(base.V_d);
    ana["E_d0"] = deptree::to_string(base.E_d0);
    ana["E_d0_sq"] = deptree::to_string(base.E_d0_sq);
    ana["V_d0"] = deptree::to_string(base.V_d0);
    j["analytic"] = ana;
    const double diff = deptree::to_double(mc.mean_mean_d() - base.E_d);
    ordered_json delta;
    delta["mean_d_minus_E_d"] = diff;
    delta["within_4_se"] = std::abs(diff) <= 4.0 * mc.se_mean_d();
    j["delta"] = delta;
    output.out() << j.dump() << "\n";
    return kExitOk;
  } catch (const deptree::ParseError& e) {
    std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const deptree::TreeError& e) {
    std::cerr << "error: " << opt.input << ": " << to_cstring(e.defect()) << ": " << e.what()
              << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

// -------------------------------------------------------------- construct

struct ConstructOptions {
  std::string family;
  std::string mode;
  int n = 2;
  std::string output;
};

int run_construct(const ConstructOptions& opt) {
  deptree::Tree tree = deptree::Tree::validate(1, {});
  deptree::LinearArrangement arr = deptree::LinearArrangement::identity(1);
  if (opt.family == "star") {
    if (opt.mode != "hub_end" && opt.mode != "hub_center") {
      std::cerr << "usage error: star modes are hub_end and hub_center\n";
      return kExitUsage;
    }
    tree = deptree::make_star_tree(opt.n);
    arr = deptree::arrange_star(opt.n, opt.mode == "hub_end" ? deptree::StarLayout::HubEnd
                                                             : deptree::StarLayout::HubCenter);
  } else {
    if (opt.mode != "identity" && opt.mode != "zigzag") {
      std::cerr << "usage error: linear modes are identity and zigzag\n";
      return kExitUsage;
    }
    tree = deptree::make_linear_tree(opt.n);
    arr = deptree::arrange_linear(opt.n, opt.mode == "identity" ? deptree::PathLayout::Identity
                                                                : deptree::PathLayout::Zigzag);
  }
  try {
    Output output(opt.output);
    const auto len = *deptree::length_stats(tree, arr);
    const auto cross = deptree::crossing_count(tree, arr);
    std::ostream& out = output.out();
    out << "# construct family=" << opt.family << " mode=" << opt.mode << " n=" << opt.n << "\n";
    out << "# mean_d = " << deptree::to_string(len.mean_d) << "\n";
    out << "# mean_d2 = " << deptree::to_string(len.mean_d2) << "\n";
    out << "# D = " << len.total << "\n";
    out << "# C = " << cross.crossings << "\n";
    out << "# M = " << cross.uncrossable << "\n";
    out << deptree::to_edgelist(tree, &arr);
    return kExitOk;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  int max_n = 5;
  std::uint64_t seed = 1;
  int sample_trees = 24;
  std::string output;
  bool inject_fault = false;
};

struct InvariantCheck {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_witness;

  void tally(bool ok, const std::string& witness) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_witness.empty()) first_witness = witness;
    }
  }
};

std::string describe(const deptree::Tree& t, const std::vector<int>& pos) {
  std::string s = "n=" + std::to_string(t.vertex_count()) + " edges=";
  for (const auto& [u, v] : t.edges())
    s += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (!pos.empty()) {
    s += " positions=";
    for (std::size_t i = 0; i < pos.size(); ++i)
      s += (i ? "," : "") + std::to_string(pos[i]);
  }
  return s;
}

int run_verify(const VerifyOptions& opt) {
  using deptree::Rational;
  enum {
    kDegreeSum,
    kDegreeSquareFloor,
    kDegreeSquareCeiling,
    kEnumerationCount,
    kCrossingPairCap,
    kCrossingUncrossableCap,
    kCrossingLengthCap,
    kCrossingDegreeCap,
    kPlanarSmallN,
    kNoncrossingLengthCap,
    kForcedPlanarity,
    kMirrorInvariance,
    kMinLengthChain,
    kStarPathMinLength,
    kNoncrossingMaxCap,
    kMaxCrossingsCap,
    kCheckCount,
  };
  std::vector<InvariantCheck> checks(kCheckCount);
  checks[kDegreeSum].name = "degree-sum";
  checks[kDegreeSquareFloor].name = "degree-square-floor";
  checks[kDegreeSquareCeiling].name = "degree-square-ceiling";
  checks[kEnumerationCount].name = "enumeration-count";
  checks[kCrossingPairCap].name = "crossing-pair-cap";
  checks[kCrossingUncrossableCap].name = "crossing-uncrossable-cap";
  checks[kCrossingLengthCap].name = "crossing-length-cap";
  checks[kCrossingDegreeCap].name = "crossing-degree-cap";
  checks[kPlanarSmallN].name = "planar-small-n";
  checks[kNoncrossingLengthCap].name = "noncrossing-length-cap";
  checks[kForcedPlanarity].name = "forced-planarity";
  checks[kMirrorInvariance].name = "mirror-invariance";
  checks[kMinLengthChain].name = "min-length-chain";
  checks[kStarPathMinLength].name = "star-path-min-length";
  checks[kNoncrossingMaxCap].name = "noncrossing-max-cap";
  checks[kMaxCrossingsCap].name = "max-crossings-cap";

  std::vector<std::string> info_lines;
  std::vector<std::string> sweep_rows;
  const bool want_rows = !opt.output.empty();

  for (int n = 2; n <= opt.max_n; ++n) {
    const bool full = n <= 6;
    std::vector<deptree::Tree> trees;
    if (full) {
      deptree::for_each_labeled_tree(n, [&](const deptree::Tree& t) { trees.push_back(t); });
      checks[kEnumerationCount].tally(
          static_cast<long long>(trees.size()) == deptree::labeled_tree_count(n),
          "n=" + std::to_string(n) + " enumerated " + std::to_string(trees.size()));
    } else {
      deptree::SplitMix64 rng(deptree::substream_seed(opt.seed, static_cast<std::uint64_t>(n)));
      for (int i = 0; i < opt.sample_trees; ++i)
        trees.push_back(deptree::random_labeled_tree(n, rng));
    }

    long long attained = 0;
    long long observed_max_c = 0;
    const long long delta_n = static_cast<long long>(n) * (n - 1) / 2;

    long long tree_index = 0;
    for (const auto& tree : trees) {
      const auto deg = deptree::degree_stats(tree);
      const long long k2 = deg.k2_sum;
      checks[kDegreeSum].tally(deg.mean_k == Rational(2LL * (n - 1), n), describe(tree, {}));
      checks[kDegreeSquareFloor].tally(k2 >= 4LL * n - 6 && ((k2 == 4LL * n - 6) == tree.is_path()),
                                       describe(tree, {}));
      checks[kDegreeSquareCeiling].tally(
          deg.mean_k2 <= Rational(n - 1) && ((deg.mean_k2 == Rational(n - 1)) == tree.is_star()),
          describe(tree, {}));

      long long max_c = -1, max_noncross_d = -1, min_d = LLONG_MAX;
      std::vector<int> max_c_pos, max_noncross_pos, min_d_pos;
      deptree::for_each_arrangement(n, [&](const std::vector<int>& pos) {
        const auto r = deptree::detail::totals(tree, pos);
        const long long C = r.crossings + (opt.inject_fault ? 1 : 0);
        const long long D = r.length_sum;
        const long long S2 = r.length_sq_sum;
        const long long rest = n - 1 - r.uncrossable;
        const auto witness = [&] { return describe(tree, pos) + " C=" + std::to_string(C); };
        checks[kCrossingPairCap].tally(C <= static_cast<long long>(n - 1) * (n - 2) / 2,
                                       witness());
        checks[kCrossingUncrossableCap].tally(C <= (rest < 2 ? 0 : rest * (rest - 1) / 2),
                                              witness());
        checks[kCrossingLengthCap].tally(
            2 * C <= n * D - S2 - static_cast<long long>(n - 1) * (n - 1), witness());
        checks[kCrossingDegreeCap].tally(2 * C <= static_cast<long long>(n) * (n - 1) - k2,
                                         witness());
        if (n <= 3) checks[kPlanarSmallN].tally(C == 0, witness());
        if (C == 0) checks[kNoncrossingLengthCap].tally(D <= delta_n, witness());
        if (rest <= 1) checks[kForcedPlanarity].tally(C == 0, witness());
        if (C > max_c) {
          max_c = C;
          max_c_pos = pos;
        }
        if (r.crossings == 0 && D > max_noncross_d) {
          max_noncross_d = D;
          max_noncross_pos = pos;
        }
        if (D < min_d) {
          min_d = D;
          min_d_pos = pos;
        }
      });

      const auto oracle_min = deptree::brute_min_mean_length(tree);
      const auto bound10 = deptree::dmin_lower_star_ensemble(deg.degrees);
      const auto bound11 = deptree::dmin_lower_hubiness(n, deg.mean_k2);
      checks[kMinLengthChain].tally(
          bound11 <= bound10 && bound10 <= oracle_min.value &&
              oracle_min.value == Rational(min_d, n - 1),
          describe(tree, oracle_min.witness.positions()) + " min=" +
              deptree::to_string(oracle_min.value) + " bound10=" + deptree::to_string(bound10));
      if (tree.is_star() || tree.is_path()) {
        const Rational expect =
            tree.is_path() ? Rational(1) : deptree::star_dmin_exact(n);
        checks[kStarPathMinLength].tally(oracle_min.value == expect,
                                         describe(tree, oracle_min.witness.positions()) +
                                             " min=" + deptree::to_string(oracle_min.value));
      }
      checks[kNoncrossingMaxCap].tally(max_noncross_d <= delta_n &&
                                           (!(tree.is_star() || tree.is_path()) ||
                                            max_noncross_d == delta_n),
                                       describe(tree, max_noncross_pos) +
                                           " D=" + std::to_string(max_noncross_d));
      if (max_noncross_d == delta_n) ++attained;
      checks[kMaxCrossingsCap].tally(
          Rational(max_c - (opt.inject_fault ? 1 : 0)) <=
              deptree::cpairs_from_degrees(n, deg.mean_k2),
          describe(tree, max_c_pos) + " maxC=" + std::to_string(max_c));
      if (max_c > observed_max_c) observed_max_c = max_c;

      if (want_rows) {
        const std::string base_id = "n" + std::to_string(n) + "/t" + std::to_string(tree_index);
        const auto add_row = [&](const std::string& kind, const std::vector<int>& pos,
                                 const Rational& value) {
          const auto rep = deptree::analyze_sentence(
              base_id + "/" + kind, tree, deptree::LinearArrangement::of_positions(pos));
          sweep_rows.push_back(deptree::report_csv_row(rep) + "," + deptree::to_decimal(value));
        };
        add_row("min_mean_d", min_d_pos, Rational(min_d, n - 1));
        add_row("max_noncrossing_D", max_noncross_pos, Rational(max_noncross_d));
        add_row("max_crossings", max_c_pos, Rational(max_c - (opt.inject_fault ? 1 : 0)));
      }
      ++tree_index;
    }

    // mirror invariance over sampled arrangements
    deptree::SplitMix64 rng(deptree::substream_seed(opt.seed, 1000 + static_cast<std::uint64_t>(n)));
    for (int i = 0; i < 50; ++i) {
      const auto& tree = trees[static_cast<std::size_t>(rng.below(trees.size()))];
      const auto arr = deptree::random_arrangement(n, rng);
      const auto mirrored = arr.reversed();
      const auto a = deptree::detail::totals(tree, arr.positions());
      const auto b = deptree::detail::totals(tree, mirrored.positions());
      checks[kMirrorInvariance].tally(a.length_sum == b.length_sum &&
                                          a.length_sq_sum == b.length_sq_sum &&
                                          a.crossings == b.crossings &&
                                          a.uncrossable == b.uncrossable,
                                      describe(tree, arr.positions()));
    }

    info_lines.push_back("n=" + std::to_string(n) + ": noncrossing maximum D attained by " +
                         std::to_string(attained) + "/" + std::to_string(trees.size()) +
                         " trees, observed max C = " + std::to_string(observed_max_c) +
                         (full ? "" : " (sampled)"));
  }

  try {
    Output output(opt.output);
    if (want_rows) {
      output.out() << deptree::report_csv_header() << ",oracle_value\n";
      for (const auto& row : sweep_rows) output.out() << row << "\n";
    }
    long long total_failures = 0;
    for (const auto& check : checks) {
      if (check.failures == 0) {
        std::cout << "[PASS] " << check.name << " (" << check.cases << " cases)\n";
      } else {
        total_failures += check.failures;
        std::cout << "[FAIL] " << check.name << " (" << check.cases << " cases, "
                  << check.failures << " failures) witness: " << check.first_witness << "\n";
      }
    }
    for (const auto& line : info_lines) std::cout << "[INFO] " << line << "\n";
    std::cout << "summary: " << checks.size() << " invariants, " << total_failures
              << " failures, seed=" << opt.seed << ", max_n=" << opt.max_n << "\n";
    return total_failures == 0 ? kExitOk : kExitViolation;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dependency tree statistics: degrees, lengths, crossings, analytic bounds"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "per-sentence statistics for a corpus or tree");
  analyze->add_option("input", analyze_opt.input, "CoNLL-U corpus or edge-list file")->required();
  analyze->add_option("--format", analyze_opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  analyze->add_option("--input-format", analyze_opt.input_format, "input format")
      ->check(CLI::IsMember({"auto", "conllu", "edgelist"}))
      ->capture_default_str();
  analyze->add_option("--min-n", analyze_opt.min_n, "smallest sentence length reported")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  analyze->add_flag("--validate", analyze_opt.validate, "re-check every bound per sentence");
  analyze->add_option("--output", analyze_opt.output, "write primary output to a file");
  analyze->add_option("--jobs", analyze_opt.jobs, "worker threads (output is identical)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "all bounds for one tree plus arrangement");
  bounds->add_option("input", bounds_opt.input, "edge-list file")->required();
  bounds->add_option("--output", bounds_opt.output, "write primary output to a file");

  SimulateOptions simulate_opt;
  auto* simulate =
      app.add_subcommand("simulate", "random-arrangement baseline for a fixed tree");
  simulate->add_option("input", simulate_opt.input, "edge-list file")->required();
  simulate->add_option("--trials", simulate_opt.trials, "number of random arrangements")
      ->check(CLI::Range(static_cast<long long>(1), static_cast<long long>(100000000)))
      ->capture_default_str();
  simulate->add_option("--seed", simulate_opt.seed, "generator seed")->capture_default_str();
  simulate->add_option("--jobs", simulate_opt.jobs, "worker threads (output is identical)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  simulate->add_option("--output", simulate_opt.output, "write primary output to a file");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "sweep trees and arrangements, check every bound");
  verify->add_option("--max-n", verify_opt.max_n, "largest vertex count swept")
      ->check(CLI::Range(2, 9))
      ->capture_default_str();
  verify->add_option("--seed", verify_opt.seed, "seed for sampled trees past n = 6")
      ->capture_default_str();
  verify->add_option("--sample-trees", verify_opt.sample_trees, "trees sampled per n past 6")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  verify->add_option("--output", verify_opt.output, "write per-tree oracle rows as CSV");
  verify->add_flag("--inject-fault", verify_opt.inject_fault,
                   "test only: perturb measured crossings to prove failures are caught")
      ->group("");

  ConstructOptions construct_opt;
  auto* construct = app.add_subcommand("construct", "extremal tree plus arrangement generators");
  construct->add_option("--family", construct_opt.family, "tree family")
      ->check(CLI::IsMember({"star", "linear"}))
      ->required();
  construct->add_option("--mode", construct_opt.mode, "layout mode")->required();
  construct->add_option("--n", construct_opt.n, "vertex count")
      ->check(CLI::Range(2, 4096))
      ->required();
  construct->add_option("--output", construct_opt.output, "write primary output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) return run_analyze(analyze_opt);
  if (bounds->parsed()) return run_bounds(bounds_opt);
  if (simulate->parsed()) return run_simulate(simulate_opt);
  if (verify->parsed()) return run_verify(verify_opt);
  if (construct->parsed()) return run_construct(construct_opt);
  return kExitUsage;
}
