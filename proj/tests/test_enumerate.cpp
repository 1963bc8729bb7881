#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "deptree/enumerate.hpp"
#include "deptree/rng.hpp"
#include "deptree/tree.hpp"

using deptree::Edge;
using deptree::Tree;

namespace {

/// Independent tree test: right edge count plus connectivity by DFS over an
/// adjacency list built straight from the candidate edges.
bool is_tree_by_dfs(int n, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (const int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

/// Counts trees among all (n-1)-subsets of possible edges. Exponential and
/// deliberately unrelated to the sequence-based enumerator.
long long count_trees_by_edge_subsets(int n) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  const int m = static_cast<int>(all.size());
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<Edge> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(all[i]);
    if (is_tree_by_dfs(n, subset)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("labeled tree counts") {
  CHECK(deptree::labeled_tree_count(1) == 1);
  CHECK(deptree::labeled_tree_count(2) == 1);
  CHECK(deptree::labeled_tree_count(3) == 3);
  CHECK(deptree::labeled_tree_count(4) == 16);
  CHECK(deptree::labeled_tree_count(5) == 125);
  CHECK(deptree::labeled_tree_count(6) == 1296);
  CHECK(deptree::labeled_tree_count(7) == 16807);
  CHECK(deptree::labeled_tree_count(8) == 262144);
  CHECK_THROWS_AS(deptree::labeled_tree_count(0), std::invalid_argument);
  CHECK_THROWS_AS(deptree::labeled_tree_count(21), std::overflow_error);
}

TEST_CASE("sequence decoding matches known shapes") {
  CHECK(deptree::prufer_decode({}, 2) == Tree::validate(2, {{1, 2}}));
  CHECK(deptree::prufer_decode({1, 1}, 4) == deptree::make_star_tree(4));
  CHECK(deptree::prufer_decode({2, 3}, 4) == deptree::make_linear_tree(4));
  CHECK_THROWS_AS(deptree::prufer_decode({1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(deptree::prufer_decode({5, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(deptree::prufer_decode({}, 1), std::invalid_argument);
}

TEST_CASE("enumerator yields each labeled tree exactly once") {
  for (const int n : {2, 3, 4, 5, 6}) {
    deptree::TreeEnumerator en(n);
    std::set<std::vector<Edge>> seen;
    long long count = 0;
    while (auto t = en.next()) {
      ++count;
      REQUIRE(t->vertex_count() == n);
      seen.insert(t->edges());
    }
    REQUIRE(count == en.total());
    REQUIRE(static_cast<long long>(seen.size()) == deptree::labeled_tree_count(n));
  }
}

TEST_CASE("enumerator counts agree with the edge-subset oracle") {
  CHECK(count_trees_by_edge_subsets(4) == deptree::labeled_tree_count(4));
  CHECK(count_trees_by_edge_subsets(5) == deptree::labeled_tree_count(5));
}

TEST_CASE("enumerator range") {
  CHECK_THROWS_AS(deptree::TreeEnumerator(1), std::out_of_range);
  CHECK_THROWS_AS(deptree::TreeEnumerator(9), std::out_of_range);
}

TEST_CASE("random labeled trees are valid and reproducible") {
  deptree::SplitMix64 a(123);
  deptree::SplitMix64 b(123);
  for (int n = 1; n <= 12; ++n) {
    const Tree ta = deptree::random_labeled_tree(n, a);
    const Tree tb = deptree::random_labeled_tree(n, b);
    CHECK(ta == tb);
    CHECK(ta.vertex_count() == n);
  }
}

TEST_CASE("random labeled trees hit every shape for small n") {
  deptree::SplitMix64 rng(7);
  std::set<std::vector<Edge>> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(deptree::random_labeled_tree(4, rng).edges());
  CHECK(seen.size() == 16);
}
