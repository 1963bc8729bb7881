#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "deptree/arrangement.hpp"
#include "deptree/rational.hpp"
#include "deptree/rng.hpp"
#include "deptree/tree.hpp"

namespace deptree {

/// P(d) for the length of a random vertex pair under a uniformly random
/// arrangement: 2(n - d) / (n(n - 1)) on 1..n-1, zero elsewhere.
inline Rational length_pmf(int n, int d) {
  if (n < 2) throw std::invalid_argument("length distribution needs n >= 2");
  if (d < 1 || d > n - 1) return Rational(0);
  return Rational(2LL * (n - d), static_cast<long long>(n) * (n - 1));
}

/// Closed-form moments of the edge-length distribution under uniformly
/// random arrangements. E_d0_sq is derived from the raw moments
/// (E[d^2] - 2 E[d] + 1) rather than re-expanded, so the three quantities
/// stay consistent by construction.
struct RandomBaseline {
  int n;
  Rational E_d;
  Rational E_d2;
  Rational V_d;
  Rational E_d0;
  Rational E_d0_sq;
  Rational V_d0;
};

inline RandomBaseline analytic_baseline(int n) {
  if (n < 2) throw std::invalid_argument("baseline needs n >= 2");
  RandomBaseline b;
  b.n = n;
  b.E_d = Rational(n + 1, 3);
  b.E_d2 = Rational(static_cast<long long>(n) * (n + 1), 6);
  b.V_d = Rational(static_cast<long long>(n + 1) * (n - 2), 18);
  b.E_d0 = b.E_d - 1;
  b.E_d0_sq = b.E_d2 - 2 * b.E_d + 1;
  b.V_d0 = b.E_d0_sq - b.E_d0 * b.E_d0;
  return b;
}

/// Average |i - j| over all position pairs, by literal summation. Slow on
/// purpose: this is the independent check that E_d above is right.
inline Rational exact_pair_average(int n) {
  if (n < 2) throw std::invalid_argument("pair average needs n >= 2");
  long long sum = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) sum += j - i;
  return Rational(2 * sum, static_cast<long long>(n) * (n - 1));
}

/// Uniformly random arrangement of 1..n.
inline LinearArrangement random_arrangement(int n, SplitMix64& rng) {
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  shuffle(pos, rng);
  return LinearArrangement::of_positions(std::move(pos));
}

/// Monte Carlo estimate of length and crossing statistics of a fixed tree
/// under uniformly random arrangements. Accumulators are exact integers, so
/// results are identical for any worker count and reproducible from the
/// seed alone: trial t draws its own generator from substream_seed(seed, t).
struct MonteCarloBaseline {
  int n = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  long long length_total = 0;      // sum over trials of D
  long long length_total_sq = 0;   // sum over trials of D^2
  long long crossing_total = 0;    // sum over trials of C
  long long crossing_total_sq = 0; // sum over trials of C^2
  long long max_crossings = 0;

  Rational mean_mean_d() const { return Rational(length_total, trials * (n - 1)); }
  Rational mean_crossings() const { return Rational(crossing_total, trials); }

  /// Standard error of the mean of per-trial mean lengths.
  double se_mean_d() const {
    return se(static_cast<double>(length_total) / (n - 1),
              static_cast<double>(length_total_sq) / (static_cast<double>(n - 1) * (n - 1)));
  }

  double se_crossings() const {
    return se(static_cast<double>(crossing_total), static_cast<double>(crossing_total_sq));
  }

 private:
  double se(double sum, double sum_sq) const {
    if (trials < 2) return 0.0;
    const double t = static_cast<double>(trials);
    const double var = (sum_sq - sum * sum / t) / (t - 1);
    return var > 0 ? std::sqrt(var / t) : 0.0;
  }
};

namespace detail {

inline void monte_carlo_shard(const Tree& t, std::uint64_t seed, long long begin,
                              long long end, MonteCarloBaseline& out) {
  const int n = t.vertex_count();
  std::vector<int> pos(n);
  for (long long trial = begin; trial < end; ++trial) {
    SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(trial)));
    std::iota(pos.begin(), pos.end(), 1);
    shuffle(pos, rng);
    const auto r = totals(t, pos);
    out.length_total += r.length_sum;
    out.length_total_sq += r.length_sum * r.length_sum;
    out.crossing_total += r.crossings;
    out.crossing_total_sq += r.crossings * r.crossings;
    if (r.crossings > out.max_crossings) out.max_crossings = r.crossings;
  }
}

}  // namespace detail

inline MonteCarloBaseline monte_carlo_baseline(const Tree& t, long long trials,
                                               std::uint64_t seed, int jobs = 1) {
  if (t.vertex_count() < 2) throw std::invalid_argument("simulation needs n >= 2");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (jobs < 1) jobs = 1;
  if (jobs > trials) jobs = static_cast<int>(trials);

  std::vector<MonteCarloBaseline> parts(jobs);
  if (jobs == 1) {
    detail::monte_carlo_shard(t, seed, 0, trials, parts[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    const long long chunk = (trials + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(trials, begin + chunk);
      workers.emplace_back(detail::monte_carlo_shard, std::cref(t), seed, begin, end,
                           std::ref(parts[w]));
    }
    for (auto& th : workers) th.join();
  }

  MonteCarloBaseline r;
  r.n = t.vertex_count();
  r.trials = trials;
  r.seed = seed;
  for (const auto& p : parts) {
    r.length_total += p.length_total;
    r.length_total_sq += p.length_total_sq;
    r.crossing_total += p.crossing_total;
    r.crossing_total_sq += p.crossing_total_sq;
    if (p.max_crossings > r.max_crossings) r.max_crossings = p.max_crossings;
  }
  return r;
}

}  // namespace deptree
