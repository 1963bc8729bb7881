#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deptree/error.hpp"
#include "deptree/rational.hpp"

namespace deptree {

/// Unordered edge, stored canonically with first < second.
using Edge = std::pair<int, int>;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// False if x and y were already connected.
  bool merge(int x, int y) {
    const int rx = find(x);
    const int ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Undirected labeled tree on vertex IDs 1..n. Instances are immutable and
/// only come out of validate(), so holders can rely on tree-ness: exactly
/// n-1 edges, no loops or duplicates, connected. Edges are sorted and
/// canonical, which makes Tree comparison structural equality.
class Tree {
 public:
  /// Full check of the tree axioms. Throws TreeError with the first defect
  /// found; the checks run in the order listed in TreeDefect.
  static Tree validate(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    for (auto& [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw TreeError(TreeDefect::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") uses a vertex outside 1.." + std::to_string(n));
      if (u == v)
        throw TreeError(TreeDefect::SelfLoop,
                        "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
      throw TreeError(TreeDefect::DuplicateEdge,
                      "edge (" + std::to_string(it->first) + "," +
                          std::to_string(it->second) + ") appears twice");
    if (static_cast<int>(edges.size()) != n - 1)
      throw TreeError(TreeDefect::WrongEdgeCount,
                      "tree on " + std::to_string(n) + " vertices needs " +
                          std::to_string(n - 1) + " edges, got " +
                          std::to_string(edges.size()));
    detail::UnionFind uf(n);
    for (const auto& [u, v] : edges)
      if (!uf.merge(u, v))
        throw TreeError(TreeDefect::DisconnectedOrCyclic,
                        "edges contain a cycle, so the graph is not a tree");
    std::vector<int> degrees(n, 0);
    for (const auto& [u, v] : edges) {
      ++degrees[u - 1];
      ++degrees[v - 1];
    }
    return Tree(n, std::move(edges), std::move(degrees));
  }

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// degrees()[v-1] is the degree of vertex v.
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int v) const { return degrees_.at(v - 1); }

  int max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
  }

  bool is_path() const { return max_degree() <= 2; }
  bool is_star() const { return n_ <= 2 || max_degree() == n_ - 1; }

  bool operator==(const Tree& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Tree(int n, std::vector<Edge> edges, std::vector<int> degrees)
      : n_(n), edges_(std::move(edges)), degrees_(std::move(degrees)) {}

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

/// Path 1-2-...-n.
inline Tree make_linear_tree(int n) {
  std::vector<Edge> edges;
  edges.reserve(n > 1 ? n - 1 : 0);
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Tree::validate(n, std::move(edges));
}

/// Star with hub 1 and leaves 2..n.
inline Tree make_star_tree(int n) {
  std::vector<Edge> edges;
  edges.reserve(n > 1 ? n - 1 : 0);
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Tree::validate(n, std::move(edges));
}

/// First and second moments and variance of the degree sequence, exact.
/// For every tree the mean degree is 2 - 2/n; that identity is not assumed
/// here, it falls out of summing the actual degrees.
struct DegreeStats {
  std::vector<int> degrees;
  long long k2_sum;  // sum of squared degrees
  Rational mean_k;
  Rational mean_k2;
  Rational var_k;
};

inline DegreeStats degree_stats(const Tree& t) {
  const int n = t.vertex_count();
  long long sum = 0;
  long long sum_sq = 0;
  for (const int k : t.degrees()) {
    sum += k;
    sum_sq += static_cast<long long>(k) * k;
  }
  DegreeStats s;
  s.degrees = t.degrees();
  s.k2_sum = sum_sq;
  s.mean_k = Rational(sum, n);
  s.mean_k2 = Rational(sum_sq, n);
  s.var_k = s.mean_k2 - s.mean_k * s.mean_k;
  return s;
}

}  // namespace deptree
