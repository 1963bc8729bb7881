#pragma once

#include <algorithm>
#include <utility>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "deptree/arrangement.hpp"
#include "deptree/rational.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// Layouts of a star built by make_star_tree.
enum class StarLayout {
  HubEnd,     // hub first: lengths 1..n-1, mean n/2, no crossings
  HubCenter,  // hub centered: attains the exact star minimum of the mean
};

/// Layouts of a path built by make_linear_tree.
enum class PathLayout {
  Identity,  // every length 1, the global minimum mean
  Zigzag,    // alternate ends: lengths n-1 down to 1, no crossings
};

/// Arrangement realizing the chosen star layout. Pair with make_star_tree(n).
inline LinearArrangement arrange_star(int n, StarLayout layout) {
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
  if (layout == StarLayout::HubEnd) return LinearArrangement::identity(n);
  const int hub = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
  std::vector<int> pos(n);
  pos[0] = hub;
  int slot = 1;
  for (int v = 2; v <= n; ++v) {
    if (slot == hub) ++slot;
    pos[v - 1] = slot++;
  }
  return LinearArrangement::of_positions(std::move(pos));
}

/// Arrangement realizing the chosen path layout. Pair with make_linear_tree(n).
inline LinearArrangement arrange_linear(int n, PathLayout layout) {
  if (n < 2) throw std::invalid_argument("construction needs n >= 2");
  if (layout == PathLayout::Identity) return LinearArrangement::identity(n);
  std::vector<int> pos(n);
  int lo = 1;
  int hi = n;
  for (int v = 1; v <= n; ++v) {
    if (v % 2 == 1) pos[v - 1] = lo++;
    else pos[v - 1] = hi--;
  }
  return LinearArrangement::of_positions(std::move(pos));
}

/// Two ways to paste non-crossing arrangements of sizes around v into one of
/// size n, with the maximum total length D the paste can reach.
enum class SplitKind {
  SharedVertex,    // halves of sizes v and n - v + 1 overlap in one vertex
  LinkedExtremes,  // halves of sizes v and n - v joined by one extra edge
};

/// Maximum D over non-crossing arrangements split at v:
///   shared vertex:   v^2 - (n + 1) v + n(n + 1)/2        for 2 <= v <= n-1
///   linked extremes: v^2 - n v + n(n + 1)/2 - 1          for 1 <= v <= n-1
/// The two differ by exactly v - 1, and the linked form at v = 1 or v = n-1
/// reaches the global non-crossing maximum n(n - 1)/2.
inline long long decomposition_max_D(int n, int v, SplitKind kind) {
  if (n < 2) throw std::invalid_argument("decomposition needs n >= 2");
  const long long half = static_cast<long long>(n) * (n + 1) / 2;
  if (kind == SplitKind::SharedVertex) {
    if (v < 2 || v > n - 1) throw std::out_of_range("shared vertex split needs 2 <= v <= n-1");
    return static_cast<long long>(v) * v - static_cast<long long>(n + 1) * v + half;
  }
  if (v < 1 || v > n - 1) throw std::out_of_range("linked split needs 1 <= v <= n-1");
  return static_cast<long long>(v) * v - static_cast<long long>(n) * v + half - 1;
}

/// Visits every position vector (entry i = position of vertex i + 1) in
/// lexicographic order.
template <class F>
void for_each_arrangement(int n, F&& fn) {
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  do {
    fn(std::as_const(pos));
  } while (std::next_permutation(pos.begin(), pos.end()));
}

/// Visits only vectors with pos[0] <= ceil(n / 2), still in lexicographic
/// order. Lengths and crossings are mirror invariant and the mirror flips
/// pos[0] to n + 1 - pos[0], so for any target of those statistics the
/// lexicographically smallest optimal vector lands in this half space.
template <class F>
void for_each_arrangement_half(int n, F&& fn) {
  std::vector<int> pos(n);
  const int cap = (n + 1) / 2;
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int first = 1; first <= cap; ++first) {
    pos[0] = first;
    rest.clear();
    for (int p = 1; p <= n; ++p)
      if (p != first) rest.push_back(p);
    do {
      std::copy(rest.begin(), rest.end(), pos.begin() + 1);
      fn(std::as_const(pos));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

/// Outcome of a brute-force search. The witness is the lexicographically
/// smallest optimal arrangement, so reruns are reproducible, and feeding it
/// back through the arrangement statistics reproduces value exactly.
struct OracleResult {
  Rational value;
  LinearArrangement witness;
  long long explored;
};

namespace detail {

inline void check_brute_size(const Tree& t, int size_cap) {
  if (t.vertex_count() < 2) throw std::invalid_argument("search needs n >= 2");
  if (t.vertex_count() > size_cap)
    throw std::length_error("size limit exceeded: n = " + std::to_string(t.vertex_count()) +
                            " > cap " + std::to_string(size_cap));
}

}  // namespace detail

/// Exact minimum of <d> over all n! arrangements (mirror-reduced search).
inline OracleResult brute_min_mean_length(const Tree& t, int size_cap = 9) {
  detail::check_brute_size(t, size_cap);
  const int n = t.vertex_count();
  long long best = LLONG_MAX;
  std::vector<int> witness;
  long long explored = 0;
  for_each_arrangement_half(n, [&](const std::vector<int>& pos) {
    ++explored;
    const long long total = detail::sum_of_lengths(t, pos);
    if (total < best) {
      best = total;
      witness = pos;
    }
  });
  return OracleResult{Rational(best, n - 1), LinearArrangement::of_positions(witness), explored};
}

/// Exact maximum of D over non-crossing arrangements.
inline OracleResult brute_max_noncrossing_D(const Tree& t, int size_cap = 9) {
  detail::check_brute_size(t, size_cap);
  const int n = t.vertex_count();
  long long best = -1;
  std::vector<int> witness;
  long long explored = 0;
  for_each_arrangement_half(n, [&](const std::vector<int>& pos) {
    ++explored;
    const auto r = detail::totals(t, pos);
    if (r.crossings == 0 && r.length_sum > best) {
      best = r.length_sum;
      witness = pos;
    }
  });
  return OracleResult{Rational(best), LinearArrangement::of_positions(witness), explored};
}

/// Exact maximum of C over all arrangements.
inline OracleResult brute_max_crossings(const Tree& t, int size_cap = 9) {
  detail::check_brute_size(t, size_cap);
  const int n = t.vertex_count();
  long long best = -1;
  std::vector<int> witness;
  long long explored = 0;
  for_each_arrangement_half(n, [&](const std::vector<int>& pos) {
    ++explored;
    const auto r = detail::totals(t, pos);
    if (r.crossings > best) {
      best = r.crossings;
      witness = pos;
    }
  });
  return OracleResult{Rational(best), LinearArrangement::of_positions(witness), explored};
}

}  // namespace deptree
