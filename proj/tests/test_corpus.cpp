#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "deptree/conllu.hpp"
#include "deptree/enumerate.hpp"
#include "deptree/report.hpp"
#include "deptree/rng.hpp"

#include "test_util.hpp"

using deptree::ConlluReader;
using deptree::Rational;
using deptree::SentenceRecord;
using deptree::SkipReason;
using deptree::Tree;

namespace {

Tree t1() {
  return Tree::validate(9, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}, {6, 8}, {8, 9}});
}

ConlluReader make_reader(std::istringstream& stream, const std::string& text) {
  stream.str(text);
  return ConlluReader(stream);
}

}  // namespace

TEST_CASE("reader walks the mixed fixture") {
  std::ifstream in(testutil::fixture("mini.conllu"));
  REQUIRE(in.good());
  ConlluReader reader(in);

  const auto r1 = reader.next();
  REQUIRE(r1.has_value());
  CHECK(r1->id == "t1");
  CHECK(r1->n == 9);
  CHECK(r1->head == std::vector<int>{2, 0, 2, 2, 4, 4, 6, 6, 8});
  CHECK(deptree::record_to_tree(*r1) == t1());

  const auto r2 = reader.next();
  REQUIRE(r2.has_value());
  CHECK(r2->id == "pair");
  CHECK(r2->n == 2);

  const auto r3 = reader.next();
  REQUIRE(r3.has_value());
  CHECK(r3->id == "tiny");
  CHECK(r3->n == 1);

  CHECK_FALSE(reader.next().has_value());
  CHECK(reader.blocks_seen() == 8);
  CHECK(reader.accepted() == 3);

  const auto& skips = reader.skips();
  REQUIRE(skips.size() == 5);
  std::map<std::string, SkipReason> by_id;
  for (const auto& s : skips) by_id[s.sent_id] = s.reason;
  CHECK(by_id.at("multi") == SkipReason::MultiRoot);
  CHECK(by_id.at("rootless") == SkipReason::NoRoot);
  CHECK(by_id.at("loop") == SkipReason::Cycle);
  CHECK(by_id.at("badhead") == SkipReason::BadHead);
  CHECK(by_id.at("badline") == SkipReason::BadLine);
}

TEST_CASE("reader skip details") {
  std::istringstream in;

  SECTION("short line") {
    auto r = make_reader(in, "1\t_\t0\n\n");
    CHECK_FALSE(r.next().has_value());
    REQUIRE(r.skips().size() == 1);
    CHECK(r.skips()[0].reason == SkipReason::BadLine);
    CHECK(r.skips()[0].line == 1);
    CHECK(r.skips()[0].sent_id == "s1");  // synthesized when no sent_id comment
  }
  SECTION("non-sequential ids") {
    auto r = make_reader(in, "1\t_\t_\t_\t_\t_\t0\t_\t_\t_\n3\t_\t_\t_\t_\t_\t1\t_\t_\t_\n");
    CHECK_FALSE(r.next().has_value());
    REQUIRE(r.skips().size() == 1);
    CHECK(r.skips()[0].reason == SkipReason::BadLine);
    CHECK(r.skips()[0].line == 2);
  }
  SECTION("comment-only block is not a sentence") {
    auto r = make_reader(in, "# sent_id = ghost\n\n1\t_\t_\t_\t_\t_\t0\t_\t_\t_\n");
    REQUIRE(r.skips().empty());
    // ghost has a sent_id but no token lines, so it is a skipped block
    const auto rec = r.next();
    REQUIRE(rec.has_value());
    CHECK(rec->n == 1);
    CHECK(r.blocks_seen() == 2);
    REQUIRE(r.skips().size() == 1);
    CHECK(r.skips()[0].sent_id == "ghost");
    CHECK(r.skips()[0].reason == SkipReason::BadLine);
  }
  SECTION("multiword ranges and empty nodes are passed over") {
    auto r = make_reader(in,
                         "1-2\tab\t_\t_\t_\t_\t_\t_\t_\t_\n"
                         "1\ta\t_\t_\t_\t_\t2\t_\t_\t_\n"
                         "1.1\tx\t_\t_\t_\t_\t_\t_\t_\t_\n"
                         "2\tb\t_\t_\t_\t_\t0\t_\t_\t_\n");
    const auto rec = r.next();
    REQUIRE(rec.has_value());
    CHECK(rec->n == 2);
    CHECK(rec->head == std::vector<int>{2, 0});
  }
  SECTION("windows line endings") {
    auto r = make_reader(in, "# sent_id = w\r\n1\ta\t_\t_\t_\t_\t0\t_\t_\t_\r\n\r\n");
    const auto rec = r.next();
    REQUIRE(rec.has_value());
    CHECK(rec->id == "w");
    CHECK(rec->n == 1);
  }
  SECTION("head beyond the sentence") {
    auto r = make_reader(in,
                         "1\ta\t_\t_\t_\t_\t0\t_\t_\t_\n"
                         "2\tb\t_\t_\t_\t_\t7\t_\t_\t_\n");
    CHECK_FALSE(r.next().has_value());
    REQUIRE(r.skips().size() == 1);
    CHECK(r.skips()[0].reason == SkipReason::BadHead);
  }
  SECTION("self-referential head forms a cycle") {
    auto r = make_reader(in,
                         "1\ta\t_\t_\t_\t_\t0\t_\t_\t_\n"
                         "2\tb\t_\t_\t_\t_\t2\t_\t_\t_\n");
    CHECK_FALSE(r.next().has_value());
    REQUIRE(r.skips().size() == 1);
    CHECK(r.skips()[0].reason == SkipReason::Cycle);
  }
}

TEST_CASE("conllu rendering round-trips") {
  const SentenceRecord rec{"t1", 9, {2, 0, 2, 2, 4, 4, 6, 6, 8}};
  std::istringstream in(deptree::to_conllu(rec));
  ConlluReader reader(in);
  const auto back = reader.next();
  REQUIRE(back.has_value());
  CHECK(back->id == rec.id);
  CHECK(back->head == rec.head);

  // random trees oriented away from root 1 survive the round trip
  deptree::SplitMix64 rng(99);
  for (int i = 0; i < 8; ++i) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const Tree t = deptree::random_labeled_tree(n, rng);
    std::vector<int> head(n, 0);
    std::vector<int> order{1};
    std::vector<bool> seen(n + 1, false);
    seen[1] = true;
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (const auto& [u, v] : t.edges()) {
        const int a = order[q];
        const int b = (u == a) ? v : (v == a ? u : 0);
        if (b != 0 && !seen[b]) {
          seen[b] = true;
          head[b - 1] = a;
          order.push_back(b);
        }
      }
    }
    const SentenceRecord sample{"r" + std::to_string(i), n, head};
    std::istringstream round(deptree::to_conllu(sample));
    ConlluReader rr(round);
    const auto got = rr.next();
    REQUIRE(got.has_value());
    CHECK(got->head == head);
    CHECK(deptree::record_to_tree(*got) == t);
  }
}

TEST_CASE("edge list parsing") {
  SECTION("fixture without arrangement") {
    std::ifstream in(testutil::fixture("t1.edges"));
    REQUIRE(in.good());
    const auto parsed = deptree::parse_edgelist(in);
    CHECK(parsed.tree == t1());
    CHECK_FALSE(parsed.arrangement.has_value());
  }
  SECTION("fixture with arrangement") {
    std::ifstream in(testutil::fixture("crossed.edges"));
    REQUIRE(in.good());
    const auto parsed = deptree::parse_edgelist(in);
    CHECK(parsed.tree == t1());
    REQUIRE(parsed.arrangement.has_value());
    CHECK(parsed.arrangement->positions() == std::vector<int>{1, 4, 8, 3, 6, 9, 7, 2, 5});
  }
  SECTION("two vertices, edge only") {
    std::istringstream in("2\n1 2\n");
    const auto parsed = deptree::parse_edgelist(in);
    CHECK(parsed.tree.vertex_count() == 2);
    CHECK_FALSE(parsed.arrangement.has_value());
  }
  SECTION("two vertices with reversed arrangement") {
    std::istringstream in("2\n1 2\n2 1\n");
    const auto parsed = deptree::parse_edgelist(in);
    REQUIRE(parsed.arrangement.has_value());
    CHECK(parsed.arrangement->positions() == std::vector<int>{2, 1});
  }
  SECTION("too many edges surfaces as a tree defect") {
    std::istringstream in("3\n1 2\n2 3\n1 3\n");
    try {
      deptree::parse_edgelist(in);
      FAIL("expected TreeError");
    } catch (const deptree::TreeError& e) {
      CHECK(e.defect() == deptree::TreeDefect::WrongEdgeCount);
    }
  }
  SECTION("parse errors carry line numbers") {
    std::istringstream a("9 9\n");
    CHECK_THROWS_AS(deptree::parse_edgelist(a), deptree::ParseError);
    std::istringstream b("3\n1 two\n2 3\n");
    try {
      deptree::parse_edgelist(b);
      FAIL("expected ParseError");
    } catch (const deptree::ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream c("");
    CHECK_THROWS_AS(deptree::parse_edgelist(c), deptree::ParseError);
    std::istringstream d("3\n1 2\n2 3\n1 2 2\n");  // bad arrangement line
    CHECK_THROWS_AS(deptree::parse_edgelist(d), deptree::ParseError);
    std::istringstream e("0\n");
    CHECK_THROWS_AS(deptree::parse_edgelist(e), deptree::ParseError);
  }
  SECTION("comments and blank lines are ignored") {
    std::istringstream in("# tree\n3\n\n1 2 # first\n2 3\n");
    CHECK(deptree::parse_edgelist(in).tree == deptree::make_linear_tree(3));
  }
  SECTION("rendering round-trips") {
    const Tree t = t1();
    const auto arr = deptree::LinearArrangement::of_positions({1, 4, 8, 3, 6, 9, 7, 2, 5});
    std::istringstream in(deptree::to_edgelist(t, &arr));
    const auto parsed = deptree::parse_edgelist(in);
    CHECK(parsed.tree == t);
    REQUIRE(parsed.arrangement.has_value());
    CHECK(*parsed.arrangement == arr);
  }
}

TEST_CASE("sentence analysis matches the hand-worked example") {
  const auto rep = deptree::analyze_sentence("t1", t1());
  CHECK(rep.n == 9);
  CHECK(rep.deg.mean_k2 == Rational(4));
  CHECK(rep.deg.var_k == Rational(68, 81));
  CHECK(rep.len.mean_d == Rational(11, 8));
  CHECK(rep.len.mean_d2 == Rational(17, 8));
  CHECK(rep.cross.crossings == 0);
  CHECK(rep.cross.uncrossable == 5);
  CHECK(rep.bounds.dmin_star_ensemble == Rational(19, 16));
  CHECK(rep.bounds.dmin_hubiness == Rational(17, 16));
  CHECK(rep.bounds.dmax_noncrossing == Rational(9, 2));
  CHECK(rep.bounds.cmax_uncrossable == 3);
  CHECK(rep.bounds.cmax_length == Rational(9));
  CHECK(rep.bounds.cpairs_degree == Rational(18));
  CHECK(rep.bounds.baseline_E_d == Rational(10, 3));
  CHECK(deptree::normalized_mean_length(rep) == Rational(33, 80));
  CHECK_FALSE(deptree::report_violation(rep).has_value());

  CHECK(deptree::report_csv_row(rep) ==
        "t1,9,4,0.83950617284,1.375,2.125,0,5,1.1875,1.0625,4.5,3,9,18,3.33333333333");

  const auto j = deptree::report_json(rep);
  CHECK(j["type"] == "report");
  CHECK(j["sent_id"] == "t1");
  CHECK(j["n"] == 9);
  CHECK(j["mean_d"] == "11/8");
  CHECK(j["var_k"] == "68/81");
  CHECK(j["C"] == 0);
  CHECK(j["dmin_eq10"] == "19/16");
  CHECK(j["cmax_eq13"] == "9");
  CHECK(j["E_d_baseline"] == "10/3");

  const auto b = deptree::bounds_json(rep);
  CHECK(b["schema"] == deptree::kReportSchema);
  CHECK(b["D"] == 11);
  CHECK(b["planar"] == true);
  CHECK(b["cmax_simple"] == 28);
  CHECK(b["crossings_impossible"] == false);
  CHECK(b["V_d_baseline"] == "35/9");
}

TEST_CASE("corpus analysis respects the length floor") {
  SECTION("default floor keeps the pair sentence") {
    std::ifstream in(testutil::fixture("mini.conllu"));
    ConlluReader reader(in);
    std::vector<std::string> seen;
    const auto summary = deptree::analyze_corpus(reader, 2, [&](const deptree::SentenceReport& r) {
      seen.push_back(r.id);
    });
    CHECK(seen == std::vector<std::string>{"t1", "pair"});
    CHECK(summary.blocks == 8);
    CHECK(summary.accepted == 3);
    CHECK(summary.reported == 2);
    CHECK(summary.below_min_n == 1);
    for (const long long c : summary.skip_counts) CHECK(c == 1);
  }
  SECTION("a higher floor drops short sentences") {
    std::ifstream in(testutil::fixture("mini.conllu"));
    ConlluReader reader(in);
    const auto summary = deptree::analyze_corpus(reader, 9, [](const deptree::SentenceReport&) {});
    CHECK(summary.reported == 1);
    CHECK(summary.below_min_n == 2);
  }
  SECTION("floor below 2 is rejected") {
    std::istringstream in("");
    ConlluReader reader(in);
    CHECK_THROWS_AS(deptree::analyze_corpus(reader, 1, [](const deptree::SentenceReport&) {}),
                    std::invalid_argument);
  }
}

TEST_CASE("aggregation groups by sentence length") {
  deptree::Aggregator agg;
  agg.add(deptree::analyze_sentence("a", deptree::make_linear_tree(4)));
  agg.add(deptree::analyze_sentence("b", deptree::make_star_tree(4)));
  agg.add(deptree::analyze_sentence("c", deptree::make_linear_tree(9)));

  const auto rows = agg.rows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].count == 2);
  CHECK(rows[0].mean_d == Rational(1 + 2, 2));        // path 1, star-as-written (1+2+3)/3 = 2
  CHECK(rows[0].mean_k2 == (Rational(5, 2) + Rational(3)) / 2);
  CHECK(rows[0].mean_C == Rational(0));
  CHECK(rows[0].mean_d_norm == (Rational(1) / Rational(5, 3) + Rational(2) / Rational(5, 3)) / 2);
  CHECK(rows[1].n == 9);
  CHECK(rows[1].count == 1);
  CHECK(rows[1].mean_d == Rational(1));

  const auto j = deptree::aggregate_json(rows[1]);
  CHECK(j["type"] == "aggregate");
  CHECK(j["n"] == 9);
  CHECK(j["count"] == 1);
  CHECK(j["mean_d"] == "1");

  CHECK(deptree::aggregate_csv_row(rows[1]).rfind("9,1,1,1,", 0) == 0);
}

TEST_CASE("csv escaping") {
  CHECK(deptree::csv_escape("plain") == "plain");
  CHECK(deptree::csv_escape("a,b") == "\"a,b\"");
  CHECK(deptree::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(deptree::csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("summary and skip json shapes") {
  deptree::CorpusSummary s;
  s.blocks = 8;
  s.accepted = 3;
  s.reported = 2;
  s.below_min_n = 1;
  s.skip_counts = {1, 1, 1, 1, 1};
  const auto j = deptree::summary_json(s);
  CHECK(j["type"] == "summary");
  CHECK(j["blocks"] == 8);
  CHECK(j["skipped"]["multi-root"] == 1);
  CHECK(j["skipped"]["no-root"] == 1);
  CHECK(j["skipped"]["cycle"] == 1);
  CHECK(j["skipped"]["bad-head"] == 1);
  CHECK(j["skipped"]["bad-line"] == 1);

  const deptree::SkipEntry e{"loop", 31, SkipReason::Cycle, "edges do not form a tree"};
  const auto sj = deptree::skip_json(e);
  CHECK(sj["type"] == "skip");
  CHECK(sj["sent_id"] == "loop");
  CHECK(sj["line"] == 31);
  CHECK(sj["reason"] == "cycle");
}
