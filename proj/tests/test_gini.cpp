#include <doctest.h>

#include <random>

#include "egini/gini.hpp"

using namespace egini;

namespace {

Stream s235() {
  return Stream::from_values({}, {Rational(2), Rational(3), Rational(5)});
}
Stream s145() {
  return Stream::from_values({}, {Rational(1), Rational(4), Rational(5)});
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 16);
  std::vector<Rational> v(len(rng));
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("naive double sum on hand-enumerated lists") {
  CHECK(double_sum_naive(std::vector<Rational>{2, 3, 5}) == 12);
  CHECK(double_sum_naive(std::vector<Rational>{1, 4}) == 6);
  CHECK(double_sum_naive(std::vector<Rational>{7, 7, 7, 7}) == 0);
  CHECK(double_sum_naive(std::vector<Rational>{0}) == 0);
}

TEST_CASE("fast path equals the naive oracle on the worked examples") {
  CHECK(double_sum_fast({2, 3, 5}) == 12);
  CHECK(double_sum_fast({5, 3, 2}) == 12);
  CHECK(double_sum_fast({0}) == 0);
}

TEST_CASE("property: fast = naive on random rational lists") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto v = random_values(rng, 60);
    CHECK(double_sum_fast(v) == double_sum_naive(v));
  }
}

TEST_CASE("property: permutation invariance") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    auto v = random_values(rng, 40);
    const Rational expected = double_sum_fast(v);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(double_sum_fast(v) == expected);
  }
}

TEST_CASE("property: translation invariance and positive homogeneity") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), pos(1, 9);
  for (int t = 0; t < 100; ++t) {
    const auto v = random_values(rng, 30);
    const Rational base = double_sum_fast(v);
    const Rational c(num(rng), den(rng));
    const Rational lambda(pos(rng), den(rng));
    auto shifted = v;
    for (auto& x : shifted) x += c;
    CHECK(double_sum_fast(shifted) == base);
    auto scaled = v;
    for (auto& x : scaled) x *= lambda;
    CHECK(double_sum_fast(scaled) == lambda * base);
  }
}

TEST_CASE("w_prefix on block horizons") {
  const auto one = w_prefix(s235(), 3, 1);
  CHECK(one.raw_double_sum == 12);
  CHECK(one.normalized == Rational(4, 3));
  const auto two = w_prefix(s235(), 3, 2);
  CHECK(two.raw_double_sum == 48);
  CHECK(two.normalized == Rational(4, 3));
  const auto c = w_prefix(Stream::constant(Rational(5)), 4, 7);
  CHECK(c.normalized == 0);
}

TEST_CASE("w_prefix bounds: 0 <= W_N <= diameter") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> per(1 + t % 5);
    for (auto& x : per) x = Rational(num(rng), den(rng));
    const Stream s = Stream::from_values({}, per);
    for (std::uint64_t n : {1ull, 5ull, 23ull}) {
      const auto w = w_prefix_at(s, n);
      CHECK(w.normalized >= 0);
      if (s.alphabet().size() >= 2)
        CHECK(w.normalized <= s.alphabet().diameter());
    }
  }
}

TEST_CASE("welfare_exact closed form on the motivating streams") {
  CHECK(welfare_exact(s235()) == Rational(-4, 3));
  CHECK(welfare_exact(s145()) == Rational(-16, 9));
  CHECK(welfare_exact(Stream::constant(Rational(3))) == 0);
}

TEST_CASE("closed form verified against the prefix functional") {
  CHECK(w_prefix(s235(), 3, 1000).normalized == Rational(4, 3));
  CHECK(w_prefix(s145(), 3, 1000).normalized == Rational(16, 9));
  const Stream s23 = Stream::from_values({}, {Rational(2), Rational(3)});
  CHECK(w_prefix(s23, 2, 1000).normalized == -welfare_exact(s23));
}

TEST_CASE("compare ranks the section-3 pair") {
  CHECK(compare(s235(), s145()) == Ordering::greater);
  CHECK(compare(s235(), s235()) == Ordering::equal);
  const Stream s23 = Stream::from_values({}, {Rational(2), Rational(3)});
  const Stream s14 = Stream::from_values({}, {Rational(1), Rational(4)});
  CHECK(welfare_exact(s23) == Rational(-1, 2));
  CHECK(welfare_exact(s14) == Rational(-3, 2));
  CHECK(compare(s23, s14) == Ordering::greater);
}

TEST_CASE("welfare depends only on frequencies") {
  const Stream a = Stream::from_values(
      {}, {Rational(1), Rational(4), Rational(4), Rational(1)});
  const Stream b = Stream::from_values(
      {Rational(9), Rational(9)}, {Rational(4), Rational(1)});
  CHECK(welfare_exact(a) == welfare_exact(b));
}

TEST_CASE("accumulator matches double_sum_fast step by step") {
  std::mt19937_64 rng(59);
  const auto v = random_values(rng, 80);
  PairwiseDistanceAccumulator acc;
  std::vector<Rational> prefix;
  for (const auto& x : v) {
    acc.insert(x);
    prefix.push_back(x);
    CHECK(acc.raw() == double_sum_fast(prefix));
  }
}

TEST_CASE("welfare_estimate on a periodic generator is flat") {
  const auto trace = welfare_estimate(stream_generator(s235()), 3, 100);
  for (const auto& p : trace.points) CHECK(p.w == Rational(4, 3));
  CHECK(trace.final_liminf_estimate() == Rational(4, 3));
}

TEST_CASE("welfare_estimate on the sparse powers-of-10 stream decays") {
  const auto gen = power_sparse_generator(10, Rational(1), Rational(4));
  const auto trace = welfare_estimate(gen, 10, 1000);
  // Oracle at small N: naive double sum over the materialized prefix.
  std::vector<Rational> prefix;
  for (std::uint64_t n = 1; n <= 30; ++n) prefix.push_back(gen(n));
  CHECK(trace.points[2].w ==
        double_sum_naive(prefix) / Rational(30 * 30));
  // The trace decays toward 0 and strictly drops right after each power.
  CHECK(trace.points.back().w < Rational(1, 100));
  CHECK(trace.points[10].w < trace.points[9].w);   // after n = 100
  CHECK(trace.points[100].w < trace.points[99].w); // after n = 1000
  // The running infimum is attained just before the jump at each power of
  // 10, so it can sit below the final point but never above it.
  Rational overall_min = trace.points.front().w;
  for (const auto& p : trace.points)
    if (p.w < overall_min) overall_min = p.w;
  CHECK(trace.final_liminf_estimate() == overall_min);
  CHECK(trace.final_liminf_estimate() <= trace.points.back().w);
}

TEST_CASE("welfare_estimate on a constant generator is all zeros") {
  const auto trace = welfare_estimate(
      [](std::uint64_t) { return Rational(2); }, 4, 50);
  for (const auto& p : trace.points) CHECK(p.w == 0);
}

TEST_CASE("tail infima are the suffix minima of the trace") {
  const auto gen = power_sparse_generator(2, Rational(0), Rational(1));
  const auto trace = welfare_estimate(gen, 2, 64);
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    Rational m = trace.points[i].w;
    for (std::size_t j = i; j < trace.points.size(); ++j)
      m = std::min(m, trace.points[j].w);
    CHECK(trace.tail_infimum[i] == m);
  }
}

TEST_CASE("convergence certificate: |W_N - lim| <= 4*diam*(p+q)/H_N") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), plen(1, 6),
      qlen(0, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> pre(qlen(rng)), per(plen(rng));
    for (auto& x : pre) x = Rational(num(rng), den(rng));
    for (auto& x : per) x = Rational(num(rng), den(rng));
    const Stream s = Stream::from_values(pre, per);
    if (s.alphabet().size() < 2) continue;
    const Rational limit = -welfare_exact(s);
    const Rational c =
        4 * s.alphabet().diameter() * Rational(pre.size() + per.size());
    PairwiseDistanceAccumulator acc;
    for (std::uint64_t n = 1; n <= 400; ++n) {
      acc.insert(s.value_at(n));
      const Rational wn = acc.raw() / Rational(BigInt(n) * n);
      CHECK(abs(Rational(wn - limit)) <= c / n);
    }
  }
}
