#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "egini/stream.hpp"

namespace egini {

// Σ_k Σ_j |v_k − v_j| over all ordered pairs, by direct double loop.
// O(n²); kept as the independent oracle for double_sum_fast.
Rational double_sum_naive(std::span<const Rational> values);

// Same sum via sort + rank weights: 2·Σ_i (2i − n − 1)·v_(i), 1-based
// rank i over the ascending order. O(n log n).
Rational double_sum_fast(std::vector<Rational> values);

struct PrefixGiniValue {
  std::uint64_t n;          // horizon H
  Rational raw_double_sum;  // Σ_k Σ_j |x_k − x_j| over [1, H]
  Rational normalized;      // raw / H²
};

// Prefix Gini functional over the block horizon H_N = N·h.
PrefixGiniValue w_prefix(const Stream& s, std::uint64_t h, std::uint64_t N);

// Same functional at an arbitrary horizon n.
PrefixGiniValue w_prefix_at(const Stream& s, std::uint64_t n);

// Exact welfare of an eventually periodic stream:
// W(s) = −Σ_{a,b} f_a·f_b·|a − b| with f the asymptotic frequencies.
Rational welfare_exact(const Stream& s);

// Mean absolute difference of a frequency distribution (the limit of the
// normalized prefix functional; welfare_exact is its negation).
Rational gini_mean_difference(const FrequencyTable& freq);

enum class Ordering { less, equal, greater };

// Welfare comparison of two eventually periodic streams.
Ordering compare(const Stream& a, const Stream& b);

// Maintains Σ_k Σ_j |v_k − v_j| under appended values. Cost per insert is
// linear in the number of distinct values seen, which for alphabet-driven
// streams is O(|Y|).
class PairwiseDistanceAccumulator {
 public:
  void insert(const Rational& v);
  const Rational& raw() const { return raw_; }
  std::uint64_t size() const { return n_; }

 private:
  std::map<Rational, std::uint64_t> counts_;
  Rational raw_ = 0;
  std::uint64_t n_ = 0;
};

// 1-based position -> utility value.
using ValueGenerator = std::function<Rational(std::uint64_t)>;

struct TracePoint {
  std::uint64_t N;
  Rational w;  // normalized W_N
};

// Finite-horizon liminf evidence: the full (N, W_N) trace plus, for each
// N0, the infimum of the observed tail {W_N : N0 <= N <= N_max}. A finite
// prefix can only bound a liminf, so the whole trace is the result.
struct WelfareTrace {
  std::uint64_t h = 1;
  std::vector<TracePoint> points;
  std::vector<Rational> tail_infimum;  // aligned with points

  const Rational& final_liminf_estimate() const { return tail_infimum.front(); }
};

// Incremental W_N trace for N = 1..N_max over H_N = N·h values drawn from
// the generator. Throws if the generator cannot supply N_max·h values
// (signalled by the generator itself throwing).
WelfareTrace welfare_estimate(const ValueGenerator& source, std::uint64_t h,
                              std::uint64_t N_max);

ValueGenerator stream_generator(const Stream& s);

// The two-valued sparse stream: `rare` at powers of `base`, `common`
// elsewhere. Not eventually periodic; usable only through the estimator.
ValueGenerator power_sparse_generator(std::uint64_t base, Rational rare,
                                      Rational common);

}  // namespace egini
