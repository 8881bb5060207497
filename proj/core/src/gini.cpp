#include "egini/gini.hpp"

#include "egini/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace egini {

Rational double_sum_naive(std::span<const Rational> values) {
  if (values.empty()) throw std::invalid_argument("empty value list");
  Rational sum = 0;
  for (const auto& a : values)
    for (const auto& b : values) sum += abs(Rational(a - b));
  return sum;
}

Rational double_sum_fast(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("empty value list");
  std::sort(values.begin(), values.end());
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  Rational sum = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    sum += Rational(2 * i - n - 1) * values[static_cast<std::size_t>(i - 1)];
  return 2 * sum;
}

PrefixGiniValue w_prefix_at(const Stream& s, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("horizon must be positive");
  Rational raw = double_sum_fast(s.prefix(n));
  Rational normalized = raw / Rational(BigInt(n) * n);
  return {n, std::move(raw), std::move(normalized)};
}

PrefixGiniValue w_prefix(const Stream& s, std::uint64_t h, std::uint64_t N) {
  if (h == 0 || N == 0) throw std::invalid_argument("h and N must be positive");
  return w_prefix_at(s, N * h);
}

Rational gini_mean_difference(const FrequencyTable& freq) {
  Rational sum = 0;
  for (auto a = freq.begin(); a != freq.end(); ++a) {
    for (auto b = std::next(a); b != freq.end(); ++b)
      sum += a->second * b->second * (b->first - a->first);
  }
  return 2 * sum;
}

Rational welfare_exact(const Stream& s) {
  return -gini_mean_difference(s.frequencies());
}

Ordering compare(const Stream& a, const Stream& b) {
  const Rational wa = welfare_exact(a);
  const Rational wb = welfare_exact(b);
  if (wa < wb) return Ordering::less;
  if (wb < wa) return Ordering::greater;
  return Ordering::equal;
}

void PairwiseDistanceAccumulator::insert(const Rational& v) {
  Rational delta = 0;
  for (const auto& [u, c] : counts_)
    delta += Rational(c) * abs(Rational(v - u));
  raw_ += 2 * delta;
  ++counts_[v];
  ++n_;
}

WelfareTrace welfare_estimate(const ValueGenerator& source, std::uint64_t h,
                              std::uint64_t N_max) {
  if (h == 0 || N_max == 0)
    throw std::invalid_argument("h and N_max must be positive");
  WelfareTrace trace;
  trace.h = h;
  trace.points.reserve(static_cast<std::size_t>(N_max));
  PairwiseDistanceAccumulator acc;
  std::uint64_t next = 1;
  for (std::uint64_t N = 1; N <= N_max; ++N) {
    for (std::uint64_t i = 0; i < h; ++i) acc.insert(source(next++));
    const std::uint64_t H = N * h;
    trace.points.push_back({N, acc.raw() / Rational(BigInt(H) * H)});
  }
  trace.tail_infimum.resize(trace.points.size());
  Rational inf = trace.points.back().w;
  for (std::size_t i = trace.points.size(); i-- > 0;) {
    inf = std::min(inf, trace.points[i].w);
    trace.tail_infimum[i] = inf;
  }
  return trace;
}

ValueGenerator stream_generator(const Stream& s) {
  return [s](std::uint64_t n) { return s.value_at(n); };
}

ValueGenerator power_sparse_generator(std::uint64_t base, Rational rare,
                                      Rational common) {
  IndexSet powers = IndexSet::power_sparse(base);
  return [powers, rare = std::move(rare),
          common = std::move(common)](std::uint64_t n) {
    return powers.contains(n) ? rare : common;
  };
}

}  // namespace egini
