#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "deptree/arrangement.hpp"
#include "deptree/bounds.hpp"
#include "deptree/conllu.hpp"
#include "deptree/tree.hpp"

namespace deptree {

inline constexpr const char* kReportSchema = "deptree-report-v1";

/// Everything computed for one sentence (tree in the written word order,
/// i.e. the identity arrangement over token positions).
struct SentenceReport {
  std::string id;
  int n;
  DegreeStats deg;
  LengthStats len;
  CrossingStats cross;
  BoundsReport bounds;
};

inline SentenceReport analyze_sentence(const std::string& id, const Tree& tree,
                                       const LinearArrangement& arr) {
  const int n = tree.vertex_count();
  if (n < 2) throw std::invalid_argument("sentence statistics need n >= 2");
  return SentenceReport{id, n, degree_stats(tree), *length_stats(tree, arr),
                        crossing_count(tree, arr), bounds_report(tree, arr)};
}

inline SentenceReport analyze_sentence(const std::string& id, const Tree& tree) {
  return analyze_sentence(id, tree, LinearArrangement::identity(tree.vertex_count()));
}

inline SentenceReport analyze_sentence(const SentenceRecord& rec) {
  return analyze_sentence(rec.id, record_to_tree(rec));
}

/// Baseline-normalized mean length: <d> divided by the random-arrangement
/// expectation (n + 1) / 3.
inline Rational normalized_mean_length(const SentenceReport& rep) {
  return rep.len.mean_d / rep.bounds.baseline_E_d;
}

struct CorpusSummary {
  long long blocks = 0;
  long long accepted = 0;
  long long reported = 0;
  long long below_min_n = 0;
  std::array<long long, 5> skip_counts{};  // indexed by SkipReason
};

/// Streams reports for every accepted sentence with n >= min_n into sink,
/// in input order, holding one sentence at a time.
template <class Sink>
CorpusSummary analyze_corpus(ConlluReader& reader, int min_n, Sink&& sink) {
  if (min_n < 2) throw std::invalid_argument("min_n must be >= 2");
  CorpusSummary summary;
  while (auto rec = reader.next()) {
    if (rec->n < min_n) {
      ++summary.below_min_n;
      continue;
    }
    ++summary.reported;
    sink(analyze_sentence(*rec));
  }
  summary.blocks = reader.blocks_seen();
  summary.accepted = reader.accepted();
  for (const auto& skip : reader.skips())
    ++summary.skip_counts[static_cast<std::size_t>(skip.reason)];
  return summary;
}

/// Per-length aggregation: exact means of the per-sentence statistics over
/// all sentences sharing the same n.
struct AggregateRow {
  int n;
  long long count;
  Rational mean_d;
  Rational mean_d2;
  Rational var_k;
  Rational mean_k2;
  Rational mean_C;
  Rational mean_d_norm;
};

class Aggregator {
 public:
  void add(const SentenceReport& rep) {
    Acc& a = acc_[rep.n];
    ++a.count;
    a.mean_d += rep.len.mean_d;
    a.mean_d2 += rep.len.mean_d2;
    a.var_k += rep.deg.var_k;
    a.mean_k2 += rep.deg.mean_k2;
    a.crossings += rep.cross.crossings;
    a.norm += normalized_mean_length(rep);
  }

  std::vector<AggregateRow> rows() const {
    std::vector<AggregateRow> out;
    out.reserve(acc_.size());
    for (const auto& [n, a] : acc_) {
      const Rational c(a.count);
      out.push_back(AggregateRow{n, a.count, a.mean_d / c, a.mean_d2 / c, a.var_k / c,
                                 a.mean_k2 / c, Rational(a.crossings) / c, a.norm / c});
    }
    return out;
  }

 private:
  struct Acc {
    long long count = 0;
    Rational mean_d{0};
    Rational mean_d2{0};
    Rational var_k{0};
    Rational mean_k2{0};
    long long crossings = 0;
    Rational norm{0};
  };

  std::map<int, Acc> acc_;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline std::string report_csv_header() {
  return "sent_id,n,mean_k2,var_k,mean_d,mean_d2,C,M,dmin_eq10,dmin_eq11,dmax_eq7,"
         "cmax_eq12,cmax_eq13,cpairs_eq14,E_d_baseline";
}

inline std::string report_csv_row(const SentenceReport& r) {
  std::string row = csv_escape(r.id);
  row += ',' + std::to_string(r.n);
  row += ',' + to_decimal(r.deg.mean_k2);
  row += ',' + to_decimal(r.deg.var_k);
  row += ',' + to_decimal(r.len.mean_d);
  row += ',' + to_decimal(r.len.mean_d2);
  row += ',' + std::to_string(r.cross.crossings);
  row += ',' + std::to_string(r.cross.uncrossable);
  row += ',' + to_decimal(r.bounds.dmin_star_ensemble);
  row += ',' + to_decimal(r.bounds.dmin_hubiness);
  row += ',' + to_decimal(r.bounds.dmax_noncrossing);
  row += ',' + std::to_string(r.bounds.cmax_uncrossable);
  row += ',' + to_decimal(r.bounds.cmax_length);
  row += ',' + to_decimal(r.bounds.cpairs_degree);
  row += ',' + to_decimal(r.bounds.baseline_E_d);
  return row;
}

inline std::string aggregate_csv_header() {
  return "n,count,mean_d,mean_d2,var_k,mean_k2,mean_C,mean_d_norm";
}

inline std::string aggregate_csv_row(const AggregateRow& r) {
  std::string row = std::to_string(r.n);
  row += ',' + std::to_string(r.count);
  row += ',' + to_decimal(r.mean_d);
  row += ',' + to_decimal(r.mean_d2);
  row += ',' + to_decimal(r.var_k);
  row += ',' + to_decimal(r.mean_k2);
  row += ',' + to_decimal(r.mean_C);
  row += ',' + to_decimal(r.mean_d_norm);
  return row;
}

/// JSON values: exact rationals as "p/q" strings, counts as numbers.
inline nlohmann::ordered_json report_json(const SentenceReport& r) {
  nlohmann::ordered_json j;
  j["type"] = "report";
  j["sent_id"] = r.id;
  j["n"] = r.n;
  j["mean_k2"] = to_string(r.deg.mean_k2);
  j["var_k"] = to_string(r.deg.var_k);
  j["mean_d"] = to_string(r.len.mean_d);
  j["mean_d2"] = to_string(r.len.mean_d2);
  j["C"] = r.cross.crossings;
  j["M"] = r.cross.uncrossable;
  j["dmin_eq10"] = to_string(r.bounds.dmin_star_ensemble);
  j["dmin_eq11"] = to_string(r.bounds.dmin_hubiness);
  j["dmax_eq7"] = to_string(r.bounds.dmax_noncrossing);
  j["cmax_eq12"] = r.bounds.cmax_uncrossable;
  j["cmax_eq13"] = to_string(r.bounds.cmax_length);
  j["cpairs_eq14"] = to_string(r.bounds.cpairs_degree);
  j["E_d_baseline"] = to_string(r.bounds.baseline_E_d);
  return j;
}

inline nlohmann::ordered_json aggregate_json(const AggregateRow& r) {
  nlohmann::ordered_json j;
  j["type"] = "aggregate";
  j["n"] = r.n;
  j["count"] = r.count;
  j["mean_d"] = to_string(r.mean_d);
  j["mean_d2"] = to_string(r.mean_d2);
  j["var_k"] = to_string(r.var_k);
  j["mean_k2"] = to_string(r.mean_k2);
  j["mean_C"] = to_string(r.mean_C);
  j["mean_d_norm"] = to_string(r.mean_d_norm);
  return j;
}

/// Full bounds object for a single tree plus arrangement.
inline nlohmann::ordered_json bounds_json(const SentenceReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["n"] = r.n;
  j["mean_k2"] = to_string(r.deg.mean_k2);
  j["var_k"] = to_string(r.deg.var_k);
  j["mean_d"] = to_string(r.len.mean_d);
  j["mean_d2"] = to_string(r.len.mean_d2);
  j["D"] = r.len.total;
  j["C"] = r.cross.crossings;
  j["M"] = r.cross.uncrossable;
  j["planar"] = r.cross.planar;
  j["dmin_eq10"] = to_string(r.bounds.dmin_star_ensemble);
  j["dmin_eq11"] = to_string(r.bounds.dmin_hubiness);
  j["dmax_eq7"] = to_string(r.bounds.dmax_noncrossing);
  j["cmax_simple"] = r.bounds.cmax_simple;
  j["cmax_eq12"] = r.bounds.cmax_uncrossable;
  j["cmax_eq13"] = to_string(r.bounds.cmax_length);
  j["cpairs_eq14"] = to_string(r.bounds.cpairs_degree);
  j["crossings_impossible"] = r.bounds.crossings_impossible;
  j["E_d_baseline"] = to_string(r.bounds.baseline_E_d);
  j["V_d_baseline"] = to_string(r.bounds.baseline_V_d);
  return j;
}

inline nlohmann::ordered_json skip_json(const SkipEntry& s) {
  nlohmann::ordered_json j;
  j["type"] = "skip";
  j["sent_id"] = s.sent_id;
  j["line"] = s.line;
  j["reason"] = to_cstring(s.reason);
  j["detail"] = s.detail;
  return j;
}

inline nlohmann::ordered_json summary_json(const CorpusSummary& s) {
  nlohmann::ordered_json j;
  j["type"] = "summary";
  j["blocks"] = s.blocks;
  j["accepted"] = s.accepted;
  j["reported"] = s.reported;
  j["below_min_n"] = s.below_min_n;
  nlohmann::ordered_json skipped;
  for (const SkipReason r : {SkipReason::MultiRoot, SkipReason::NoRoot, SkipReason::Cycle,
                             SkipReason::BadHead, SkipReason::BadLine})
    skipped[to_cstring(r)] = s.skip_counts[static_cast<std::size_t>(r)];
  j["skipped"] = skipped;
  return j;
}

/// Full invariant re-check of a finished report, used by --validate.
inline std::optional<std::string> report_violation(const SentenceReport& r) {
  return bound_violation(r.bounds, r.deg, r.len, r.cross);
}

}  // namespace deptree
