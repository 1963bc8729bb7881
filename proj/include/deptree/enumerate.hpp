#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "deptree/rng.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// Number of labeled trees on n vertices: n^(n-2) for n >= 2, and 1 for n = 1.
inline long long labeled_tree_count(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (n > 20) throw std::overflow_error("labeled tree count overflows past n = 20");
  if (n <= 2) return 1;
  long long count = 1;
  for (int i = 0; i < n - 2; ++i) count *= n;
  return count;
}

/// Rebuild the tree encoded by a sequence over 1..n of length n-2. Quadratic
/// leaf scan, ample for the n <= 8 this project enumerates.
inline Tree prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("sequence decoding needs n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("sequence must have length n - 2");
  for (const int s : seq)
    if (s < 1 || s > n) throw std::invalid_argument("sequence value outside 1..n");

  std::vector<int> degree(n + 1, 1);
  for (const int s : seq) ++degree[s];
  std::vector<bool> removed(n + 1, false);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (const int s : seq) {
    int leaf = 0;
    for (int v = 1; v <= n; ++v) {
      if (!removed[v] && degree[v] == 1) {
        leaf = v;
        break;
      }
    }
    edges.emplace_back(leaf, s);
    removed[leaf] = true;
    --degree[s];
  }
  int a = 0, b = 0;
  for (int v = 1; v <= n; ++v) {
    if (removed[v]) continue;
    if (a == 0) a = v;
    else b = v;
  }
  edges.emplace_back(a, b);
  return Tree::validate(n, std::move(edges));
}

/// Streams every labeled tree on n vertices exactly once, in the
/// lexicographic order of the encoding sequences. Supported for 2 <= n <= 8,
/// i.e. up to 8^6 = 262144 trees.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n) : n_(n) {
    if (n < 2 || n > 8)
      throw std::out_of_range("tree enumeration supports 2 <= n <= 8");
    seq_.assign(n - 2, 1);
  }

  long long total() const { return labeled_tree_count(n_); }

  std::optional<Tree> next() {
    if (done_) return std::nullopt;
    Tree t = prufer_decode(seq_, n_);
    int i = static_cast<int>(seq_.size()) - 1;
    while (i >= 0 && seq_[i] == n_) {
      seq_[i] = 1;
      --i;
    }
    if (i < 0) done_ = true;
    else ++seq_[i];
    return t;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
};

template <class F>
void for_each_labeled_tree(int n, F&& fn) {
  TreeEnumerator en(n);
  while (auto t = en.next()) fn(*t);
}

/// Uniformly random labeled tree via a random encoding sequence.
inline Tree random_labeled_tree(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (n == 1) return Tree::validate(1, {});
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
  return prufer_decode(seq, n);
}

}  // namespace deptree
