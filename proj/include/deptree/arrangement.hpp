#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deptree/rational.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// Bijection from vertices 1..n to positions 1..n of a linear order.
/// positions()[i] is the position of vertex i+1.
class LinearArrangement {
 public:
  static LinearArrangement identity(int n) {
    if (n < 1) throw std::invalid_argument("arrangement needs n >= 1");
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 1);
    return LinearArrangement(std::move(pos));
  }

  /// Validates that positions is a permutation of 1..n.
  static LinearArrangement of_positions(std::vector<int> positions) {
    const int n = static_cast<int>(positions.size());
    if (n < 1) throw std::invalid_argument("arrangement needs n >= 1");
    std::vector<char> seen(n + 1, 0);
    for (const int p : positions) {
      if (p < 1 || p > n)
        throw std::invalid_argument("position " + std::to_string(p) +
                                    " outside 1.." + std::to_string(n));
      if (seen[p]++)
        throw std::invalid_argument("position " + std::to_string(p) +
                                    " used twice, not a bijection");
    }
    return LinearArrangement(std::move(positions));
  }

  int size() const { return static_cast<int>(pos_.size()); }
  int position_of(int vertex) const { return pos_.at(vertex - 1); }
  const std::vector<int>& positions() const { return pos_; }

  /// Mirror image: position p becomes n + 1 - p. Lengths and crossings are
  /// invariant under this map.
  LinearArrangement reversed() const {
    std::vector<int> pos(pos_);
    const int n = size();
    for (int& p : pos) p = n + 1 - p;
    return LinearArrangement(std::move(pos));
  }

  /// Inverse permutation: entry p-1 is the vertex sitting at position p.
  std::vector<int> vertices_by_position() const {
    std::vector<int> at(pos_.size());
    for (int v = 1; v <= size(); ++v) at[pos_[v - 1] - 1] = v;
    return at;
  }

  bool operator==(const LinearArrangement& other) const { return pos_ == other.pos_; }

 private:
  explicit LinearArrangement(std::vector<int> pos) : pos_(std::move(pos)) {}

  std::vector<int> pos_;
};

namespace detail {

/// Sum of edge lengths under the raw position vector (pos[i] = position of
/// vertex i+1). Shared by the public stats, the brute-force searches and the
/// Monte Carlo loop so all of them measure the same quantity.
inline long long sum_of_lengths(const Tree& t, const std::vector<int>& pos) {
  long long total = 0;
  for (const auto& [u, v] : t.edges()) total += std::abs(pos[u - 1] - pos[v - 1]);
  return total;
}

struct ArrangementTotals {
  long long length_sum = 0;
  long long length_sq_sum = 0;
  long long crossings = 0;
  int uncrossable = 0;
};

inline ArrangementTotals totals(const Tree& t, const std::vector<int>& pos) {
  const int n = t.vertex_count();
  const auto& edges = t.edges();
  const int m = static_cast<int>(edges.size());
  ArrangementTotals r;
  std::vector<std::pair<int, int>> span(m);
  for (int i = 0; i < m; ++i) {
    int a = pos[edges[i].first - 1];
    int b = pos[edges[i].second - 1];
    if (a > b) std::swap(a, b);
    span[i] = {a, b};
    const long long d = b - a;
    r.length_sum += d;
    r.length_sq_sum += d * d;
    if (d == 1 || d == n - 1) ++r.uncrossable;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& [a1, b1] = span[i];
      const auto& [a2, b2] = span[j];
      // two edges cross iff their position intervals strictly interleave
      if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
        ++r.crossings;
    }
  }
  return r;
}

}  // namespace detail

/// Exact length statistics of a tree under an arrangement. lengths follows
/// the tree's canonical edge order; mean_d0 is the mean of d - 1.
struct LengthStats {
  std::vector<int> lengths;
  long long total;
  Rational mean_d;
  Rational mean_d2;
  Rational mean_d0;
};

/// nullopt iff n = 1: a single vertex has no edges, so length moments are
/// undefined rather than zero.
inline std::optional<LengthStats> length_stats(const Tree& t, const LinearArrangement& arr) {
  if (arr.size() != t.vertex_count())
    throw std::invalid_argument("arrangement size does not match tree");
  const int n = t.vertex_count();
  if (n == 1) return std::nullopt;

  LengthStats s;
  s.lengths.reserve(n - 1);
  long long sum = 0;
  long long sum_sq = 0;
  for (const auto& [u, v] : t.edges()) {
    const int d = std::abs(arr.position_of(u) - arr.position_of(v));
    s.lengths.push_back(d);
    sum += d;
    sum_sq += static_cast<long long>(d) * d;
  }
  s.total = sum;
  s.mean_d = Rational(sum, n - 1);
  s.mean_d2 = Rational(sum_sq, n - 1);
  s.mean_d0 = s.mean_d - 1;
  return s;
}

struct CrossingStats {
  long long crossings;  // C: unordered pairs of edges that cross
  int uncrossable;      // M: edges of length 1 or n - 1
  bool planar;          // C == 0
};

/// Definitional pairwise count: edges cross iff their position intervals
/// strictly interleave. Edges sharing a vertex never cross.
inline CrossingStats crossing_count(const Tree& t, const LinearArrangement& arr) {
  if (arr.size() != t.vertex_count())
    throw std::invalid_argument("arrangement size does not match tree");
  const auto r = detail::totals(t, arr.positions());
  return CrossingStats{r.crossings, r.uncrossable, r.crossings == 0};
}

}  // namespace deptree
