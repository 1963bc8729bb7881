#pragma once

#include <charconv>
#include <climits>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "deptree/arrangement.hpp"
#include "deptree/error.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// One accepted sentence: n tokens, head[i-1] in 0..n with exactly one 0
/// (the root). By construction the non-root heads form a valid tree.
struct SentenceRecord {
  std::string id;
  int n = 0;
  std::vector<int> head;
};

enum class SkipReason { MultiRoot, NoRoot, Cycle, BadHead, BadLine };

inline const char* to_cstring(SkipReason r) {
  switch (r) {
    case SkipReason::MultiRoot: return "multi-root";
    case SkipReason::NoRoot: return "no-root";
    case SkipReason::Cycle: return "cycle";
    case SkipReason::BadHead: return "bad-head";
    case SkipReason::BadLine: return "bad-line";
  }
  return "unknown";
}

struct SkipEntry {
  std::string sent_id;
  long line = 0;
  SkipReason reason = SkipReason::BadLine;
  std::string detail;
};

/// Edges (i, head[i-1]) for the non-root tokens, validated as a tree.
inline Tree tree_from_heads(const std::vector<int>& head) {
  const int n = static_cast<int>(head.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i <= n; ++i)
    if (head[i - 1] != 0) edges.emplace_back(i, head[i - 1]);
  return Tree::validate(n, std::move(edges));
}

inline Tree record_to_tree(const SentenceRecord& rec) { return tree_from_heads(rec.head); }

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

/// Token IDs like "3-4" (multiword range) or "3.1" (empty node) mark lines
/// that carry no tree edge and are passed over.
inline bool is_ignorable_token_id(std::string_view id) {
  const auto dash = id.find('-');
  if (dash != std::string_view::npos)
    return all_digits(id.substr(0, dash)) && all_digits(id.substr(dash + 1));
  const auto dot = id.find('.');
  if (dot != std::string_view::npos)
    return all_digits(id.substr(0, dot)) && all_digits(id.substr(dot + 1));
  return false;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace detail

/// Streaming reader over CoNLL-U input. Only the ID and HEAD columns are
/// interpreted. Malformed sentences never abort the stream: they are logged
/// with a reason and reading continues with the next blank-line block.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in) : in_(in) {}

  /// Next accepted sentence, or nullopt at end of input.
  std::optional<SentenceRecord> next() {
    while (true) {
      Block block = read_block();
      if (block.end_of_input && block.lines.empty() && block.sent_id.empty()) return std::nullopt;
      if (block.lines.empty() && block.sent_id.empty()) continue;  // stray blank lines or comments
      ++blocks_;
      const std::string id = block.sent_id.empty() ? "s" + std::to_string(blocks_) : block.sent_id;
      if (auto rec = accept(block, id)) {
        ++accepted_;
        return rec;
      }
    }
  }

  const std::vector<SkipEntry>& skips() const { return skips_; }
  long long blocks_seen() const { return blocks_; }
  long long accepted() const { return accepted_; }

 private:
  struct TokenLine {
    long line_no;
    std::string text;
  };

  struct Block {
    std::string sent_id;
    long first_line = 0;
    std::vector<TokenLine> lines;
    bool end_of_input = false;
  };

  Block read_block() {
    Block block;
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty()) {
        if (block.lines.empty() && block.sent_id.empty()) continue;
        return block;
      }
      if (block.first_line == 0) block.first_line = line_;
      if (raw[0] == '#') {
        read_comment(raw, block);
        continue;
      }
      block.lines.push_back(TokenLine{line_, raw});
    }
    block.end_of_input = true;
    return block;
  }

  static void read_comment(const std::string& raw, Block& block) {
    const auto eq = raw.find('=');
    if (eq == std::string::npos) return;
    std::string key = raw.substr(1, eq - 1);
    std::string value = raw.substr(eq + 1);
    const auto strip = [](std::string& s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    };
    strip(key);
    strip(value);
    if (key == "sent_id" && !value.empty()) block.sent_id = value;
  }

  std::optional<SentenceRecord> accept(const Block& block, const std::string& id) {
    std::vector<int> heads;
    for (const auto& tl : block.lines) {
      const auto fields = detail::split_tabs(tl.text);
      if (detail::is_ignorable_token_id(fields[0])) continue;
      if (fields.size() < 7)
        return skip(id, tl.line_no, SkipReason::BadLine, "expected at least 7 tab-separated columns");
      int token_id = 0;
      if (!detail::parse_int(fields[0], token_id))
        return skip(id, tl.line_no, SkipReason::BadLine, "token id is not an integer");
      if (token_id != static_cast<int>(heads.size()) + 1)
        return skip(id, tl.line_no, SkipReason::BadLine, "token ids are not sequential from 1");
      int head = 0;
      if (!detail::parse_int(fields[6], head))
        return skip(id, tl.line_no, SkipReason::BadLine, "head is not an integer");
      heads.push_back(head);
    }
    const int n = static_cast<int>(heads.size());
    if (n == 0) return skip(id, block.first_line, SkipReason::BadLine, "no token lines");

    int roots = 0;
    for (const int h : heads)
      if (h == 0) ++roots;
    if (roots == 0) return skip(id, block.first_line, SkipReason::NoRoot, "no token has head 0");
    if (roots > 1)
      return skip(id, block.first_line, SkipReason::MultiRoot,
                  std::to_string(roots) + " tokens have head 0");

    try {
      tree_from_heads(heads);
    } catch (const TreeError& e) {
      const SkipReason reason = e.defect() == TreeDefect::VertexOutOfRange
                                    ? SkipReason::BadHead
                                    : SkipReason::Cycle;
      return skip(id, block.first_line, reason, e.what());
    }
    return SentenceRecord{id, n, std::move(heads)};
  }

  std::optional<SentenceRecord> skip(const std::string& id, long line_no, SkipReason reason,
                                     const std::string& detail) {
    skips_.push_back(SkipEntry{id, line_no, reason, detail});
    return std::nullopt;
  }

  std::istream& in_;
  long line_ = 0;
  long long blocks_ = 0;
  long long accepted_ = 0;
  std::vector<SkipEntry> skips_;
};

/// Minimal faithful CoNLL-U rendering of a record: ID and HEAD carry the
/// data, every other column is "_". Parsing the output yields the record.
inline std::string to_conllu(const SentenceRecord& rec) {
  std::string out = "# sent_id = " + rec.id + "\n";
  for (int i = 1; i <= rec.n; ++i) {
    out += std::to_string(i);
    out += "\t_\t_\t_\t_\t_\t";
    out += std::to_string(rec.head[i - 1]);
    out += "\t_\t_\t_\n";
  }
  out += "\n";
  return out;
}

/// Edge-list text format: vertex count, then one "u v" line per edge, then
/// optionally one line of n positions (entry i is the position of vertex i).
/// '#' starts a comment anywhere on a line.
struct EdgeListInput {
  Tree tree;
  std::optional<LinearArrangement> arrangement;
};

inline EdgeListInput parse_edgelist(std::istream& in) {
  struct Line {
    long no;
    std::vector<long long> values;
  };
  std::vector<Line> lines;
  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    Line line{line_no, {}};
    std::string tok;
    while (fields >> tok) {
      long long value = 0;
      const auto* b = tok.data();
      const auto* e = tok.data() + tok.size();
      const auto [p, ec] = std::from_chars(b, e, value);
      if (ec != std::errc() || p != e)
        throw ParseError(line_no, "expected an integer, got '" + tok + "'");
      line.values.push_back(value);
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw ParseError(line_no ? line_no : 1, "missing vertex count");
  if (lines[0].values.size() != 1)
    throw ParseError(lines[0].no, "first line must hold the vertex count only");
  const long long n_ll = lines[0].values[0];
  if (n_ll < 1 || n_ll > 1'000'000) throw ParseError(lines[0].no, "vertex count out of range");
  const int n = static_cast<int>(n_ll);

  const auto body = std::vector<Line>(lines.begin() + 1, lines.end());
  bool has_arrangement = false;
  if (body.size() == static_cast<std::size_t>(n) && !body.empty() &&
      body.back().values.size() == static_cast<std::size_t>(n)) {
    has_arrangement = true;
  }
  const std::size_t edge_lines = body.size() - (has_arrangement ? 1 : 0);

  std::vector<Edge> edges;
  edges.reserve(edge_lines);
  for (std::size_t i = 0; i < edge_lines; ++i) {
    if (body[i].values.size() != 2)
      throw ParseError(body[i].no, "expected an edge as two integers");
    const long long u = body[i].values[0];
    const long long v = body[i].values[1];
    if (u < INT_MIN || u > INT_MAX || v < INT_MIN || v > INT_MAX)
      throw ParseError(body[i].no, "vertex id out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  Tree tree = Tree::validate(n, std::move(edges));

  std::optional<LinearArrangement> arrangement;
  if (has_arrangement) {
    std::vector<int> pos;
    pos.reserve(n);
    for (const long long p : body.back().values) {
      if (p < 1 || p > n) throw ParseError(body.back().no, "position out of range 1..n");
      pos.push_back(static_cast<int>(p));
    }
    try {
      arrangement = LinearArrangement::of_positions(std::move(pos));
    } catch (const std::invalid_argument& e) {
      throw ParseError(body.back().no, e.what());
    }
  }
  return EdgeListInput{std::move(tree), std::move(arrangement)};
}

inline std::string to_edgelist(const Tree& t, const LinearArrangement* arrangement = nullptr) {
  std::string out = std::to_string(t.vertex_count()) + "\n";
  for (const auto& [u, v] : t.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  if (arrangement != nullptr) {
    std::string line;
    for (const int p : arrangement->positions()) {
      if (!line.empty()) line += ' ';
      line += std::to_string(p);
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace deptree
