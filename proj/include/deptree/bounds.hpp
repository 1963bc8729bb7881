#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deptree/arrangement.hpp"
#include "deptree/random_baseline.hpp"
#include "deptree/rational.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// Lower bound on the minimum mean dependency length of a tree, driven by
/// the whole degree sequence: each vertex is costed as the hub of a star
/// whose rays take the shortest slots available around it.
inline Rational dmin_lower_star_ensemble(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 2) throw std::invalid_argument("degree sequence needs n >= 2");
  long long degree_sum = 0;
  long long cost = 0;
  for (const int k : degrees) {
    if (k < 1) throw std::invalid_argument("tree degree sequence has no zeros");
    degree_sum += k;
    const long long half = k / 2;
    cost += half * (half + 1);
    if (k % 2 != 0) cost += (k + 1) / 2;
  }
  if (degree_sum != 2LL * (n - 1))
    throw std::invalid_argument("degree sequence does not sum to 2(n - 1)");
  return Rational(cost, 2LL * (n - 1));
}

/// Weaker but closed-form lower bound in terms of the degree second moment.
inline Rational dmin_lower_hubiness(int n, const Rational& mean_k2) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  return Rational(n, 8LL * (n - 1)) * mean_k2 + Rational(1, 2);
}

/// Exact minimum mean length of a star, attained by putting the hub at the
/// center of the linear order.
inline Rational star_dmin_exact(int n) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  if (n % 2 == 0) return Rational(static_cast<long long>(n) * n, 4LL * (n - 1));
  return Rational(n + 1, 4);
}

/// Maximum mean length achievable without crossings: n / 2.
inline Rational dmax_noncrossing(int n) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  return Rational(n, 2);
}

/// Trivial cap on crossings: the number of unordered pairs formed by the
/// n - 1 edges. Tighter caps follow below.
inline long long cmax_simple(int n) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  return static_cast<long long>(n - 1) * (n - 2) / 2;
}

/// Cap given that `uncrossable` edges (length 1 or n - 1) cannot cross
/// anything: only the remaining n - 1 - M edges can pair up.
inline long long cmax_from_uncrossable(int n, int uncrossable) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  if (uncrossable < 0 || uncrossable > n - 1)
    throw std::out_of_range("uncrossable edge count outside 0..n-1");
  const long long rest = n - 1 - uncrossable;
  return rest < 2 ? 0 : rest * (rest - 1) / 2;
}

/// True when at most one crossable edge remains, which forces C = 0.
inline bool crossings_impossible(int n, int uncrossable) {
  return cmax_from_uncrossable(n, uncrossable) == 0;
}

/// Cap on crossings from the first two length moments of the arrangement:
/// an edge of length d has at most (d - 1)(n - d - 1) potential partners,
/// and summing that capacity over edges gives
/// ((n - 1) / 2) (n <d> - <d^2> - n + 1).
inline Rational cmax_from_length_moments(int n, const Rational& mean_d,
                                         const Rational& mean_d2) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  return Rational(n - 1, 2) * (Rational(n) * mean_d - mean_d2 - Rational(n - 1));
}

/// Number of edges an edge of length d could cross: edges fully inside one
/// of the gaps it leaves. Defined for 1 <= d <= n - 1.
inline long long arc_crossing_capacity(int n, int d) {
  if (n < 2) throw std::invalid_argument("capacity needs n >= 2");
  if (d < 1 || d > n - 1) throw std::out_of_range("length outside 1..n-1");
  return static_cast<long long>(d - 1) * (n - d - 1);
}

/// Number of edge pairs that do not share a vertex, in terms of the degree
/// second moment: (n / 2)(n - 1 - <k^2>). An arrangement-free cap on C.
inline Rational cpairs_from_degrees(int n, const Rational& mean_k2) {
  if (n < 2) throw std::invalid_argument("bound needs n >= 2");
  return Rational(n, 2) * (Rational(n - 1) - mean_k2);
}

/// Every analytic bound evaluated for one tree plus one arrangement,
/// together with the random-arrangement baseline for the same n.
struct BoundsReport {
  int n;
  Rational dmin_star_ensemble;  // lower bound on min <d>, degree sequence
  Rational dmin_hubiness;       // lower bound on min <d>, degree second moment
  Rational dmax_noncrossing;    // upper bound on <d> when C = 0
  long long cmax_simple;        // C(n-1, 2)
  long long cmax_uncrossable;   // cap from M
  Rational cmax_length;         // cap from length moments
  Rational cpairs_degree;       // cap from degree second moment
  bool crossings_impossible;    // forced C = 0
  Rational baseline_E_d;
  Rational baseline_V_d;
};

inline BoundsReport bounds_report(const Tree& t, const LinearArrangement& arr) {
  const int n = t.vertex_count();
  if (n < 2) throw std::invalid_argument("bounds need n >= 2");
  const DegreeStats deg = degree_stats(t);
  const LengthStats len = *length_stats(t, arr);
  const CrossingStats cross = crossing_count(t, arr);
  const RandomBaseline base = analytic_baseline(n);

  BoundsReport r;
  r.n = n;
  r.dmin_star_ensemble = dmin_lower_star_ensemble(deg.degrees);
  r.dmin_hubiness = dmin_lower_hubiness(n, deg.mean_k2);
  r.dmax_noncrossing = dmax_noncrossing(n);
  r.cmax_simple = cmax_simple(n);
  r.cmax_uncrossable = cmax_from_uncrossable(n, cross.uncrossable);
  r.cmax_length = cmax_from_length_moments(n, len.mean_d, len.mean_d2);
  r.cpairs_degree = cpairs_from_degrees(n, deg.mean_k2);
  r.crossings_impossible = crossings_impossible(n, cross.uncrossable);
  r.baseline_E_d = base.E_d;
  r.baseline_V_d = base.V_d;
  return r;
}

/// Re-checks every relation the bounds assert against the measured
/// statistics. Returns a description of the first violated relation, or
/// nullopt when all hold. This is what --validate and the verifier run.
inline std::optional<std::string> bound_violation(const BoundsReport& b,
                                                  const DegreeStats& deg,
                                                  const LengthStats& len,
                                                  const CrossingStats& cross) {
  const long long C = cross.crossings;
  const Rational Cr(C);
  const int n = b.n;
  const auto fail = [](const std::string& what) { return std::optional<std::string>(what); };

  if (deg.mean_k != Rational(2LL * (n - 1), n))
    return fail("mean degree is not 2 - 2/n");
  if (deg.k2_sum < 4LL * n - 6)
    return fail("degree square sum below the path minimum 4n - 6");
  if (deg.mean_k2 > Rational(n - 1))
    return fail("degree second moment above the star maximum n - 1");
  if (len.mean_d0 != len.mean_d - 1)
    return fail("mean of d - 1 inconsistent with mean of d");
  if (cross.planar != (C == 0))
    return fail("planarity flag inconsistent with crossing count");
  if (n <= 3 && C != 0)
    return fail("crossings reported for n <= 3");
  if (C > b.cmax_simple)
    return fail("crossings exceed the edge pair count: C = " + std::to_string(C) +
                " > " + std::to_string(b.cmax_simple));
  if (C > b.cmax_uncrossable)
    return fail("crossings exceed the cap from uncrossable edges: C = " +
                std::to_string(C) + " > " + std::to_string(b.cmax_uncrossable));
  if (Cr > b.cmax_length)
    return fail("crossings exceed the cap from length moments: C = " +
                std::to_string(C) + " > " + to_string(b.cmax_length));
  if (Cr > b.cpairs_degree)
    return fail("crossings exceed the degree-based pair count: C = " +
                std::to_string(C) + " > " + to_string(b.cpairs_degree));
  if (b.cpairs_degree < Rational(0))
    return fail("degree-based pair count is negative");
  if (b.crossings_impossible && C != 0)
    return fail("crossings reported although impossible");
  if (b.dmin_hubiness > b.dmin_star_ensemble)
    return fail("degree-moment lower bound exceeds the degree-sequence one");
  if (len.mean_d < b.dmin_star_ensemble)
    return fail("mean length below its lower bound: " + to_string(len.mean_d) +
                " < " + to_string(b.dmin_star_ensemble));
  if (cross.planar && len.mean_d > b.dmax_noncrossing)
    return fail("non-crossing arrangement exceeds mean length n / 2");
  return std::nullopt;
}

}  // namespace deptree
