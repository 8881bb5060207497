#include "egini/stream.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egini {

Alphabet::Alphabet(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("alphabet must be non-empty");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i]))
      throw std::invalid_argument("alphabet values must be strictly increasing");
  }
}

std::optional<std::size_t> Alphabet::index_of(const Rational& v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

Rational Alphabet::min_gap() const {
  if (values_.size() < 2)
    throw std::logic_error("min_gap requires at least two alphabet values");
  Rational gap = values_[1] - values_[0];
  for (std::size_t i = 2; i < values_.size(); ++i)
    gap = std::min(gap, Rational(values_[i] - values_[i - 1]));
  return gap;
}

Rational Alphabet::diameter() const { return values_.back() - values_.front(); }

Stream::Stream(Alphabet alphabet, std::vector<std::size_t> preperiod,
               std::vector<std::size_t> period)
    : alphabet_(std::move(alphabet)),
      preperiod_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be non-empty");
  auto in_range = [this](std::size_t i) { return i < alphabet_.size(); };
  if (!std::all_of(preperiod_.begin(), preperiod_.end(), in_range) ||
      !std::all_of(period_.begin(), period_.end(), in_range))
    throw std::invalid_argument("stream index outside alphabet");
}

Stream Stream::from_values(const std::vector<Rational>& preperiod,
                           const std::vector<Rational>& period) {
  std::vector<Rational> all(preperiod);
  all.insert(all.end(), period.begin(), period.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Alphabet alpha(all);
  auto to_idx = [&](const std::vector<Rational>& vs) {
    std::vector<std::size_t> idx;
    idx.reserve(vs.size());
    for (const auto& v : vs) idx.push_back(*alpha.index_of(v));
    return idx;
  };
  return Stream(alpha, to_idx(preperiod), to_idx(period));
}

Stream Stream::constant(const Rational& v) {
  return Stream(Alphabet({v}), {}, {0});
}

const Rational& Stream::value_at(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("streams are 1-indexed");
  if (n <= preperiod_.size())
    return alphabet_.value(preperiod_[static_cast<std::size_t>(n - 1)]);
  const std::uint64_t off = (n - preperiod_.size() - 1) % period_.size();
  return alphabet_.value(period_[static_cast<std::size_t>(off)]);
}

std::vector<Rational> Stream::prefix(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("prefix length must be positive");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t k = 1; k <= n; ++k) out.push_back(value_at(k));
  return out;
}

FrequencyTable Stream::frequencies() const {
  std::map<std::size_t, std::uint64_t> counts;
  for (std::size_t i : period_) ++counts[i];
  FrequencyTable table;
  const Rational len(static_cast<std::uint64_t>(period_.size()));
  for (const auto& [idx, c] : counts)
    table[alphabet_.value(idx)] = Rational(c) / len;
  return table;
}

Stream Stream::swap_coordinates(std::uint64_t i, std::uint64_t j) const {
  if (i == 0 || j == 0) throw std::invalid_argument("streams are 1-indexed");
  if (i == j) throw std::invalid_argument("swap requires distinct positions");
  const std::uint64_t m = std::max(i, j);
  std::vector<std::size_t> pre;
  pre.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t n = 1; n <= m; ++n) {
    if (n <= preperiod_.size()) {
      pre.push_back(preperiod_[static_cast<std::size_t>(n - 1)]);
    } else {
      pre.push_back(period_[static_cast<std::size_t>(
          (n - preperiod_.size() - 1) % period_.size())]);
    }
  }
  std::swap(pre[static_cast<std::size_t>(i - 1)],
            pre[static_cast<std::size_t>(j - 1)]);
  // Rotate the period so position m+1 continues the original tail.
  std::vector<std::size_t> per(period_.size());
  const std::uint64_t shift =
      m >= preperiod_.size() ? (m - preperiod_.size()) % period_.size() : 0;
  for (std::size_t k = 0; k < period_.size(); ++k)
    per[k] = period_[(k + static_cast<std::size_t>(shift)) % period_.size()];
  if (m < preperiod_.size()) {
    // Swap stayed inside the original preperiod; keep its tail.
    pre.assign(preperiod_.begin(), preperiod_.end());
    std::swap(pre[static_cast<std::size_t>(i - 1)],
              pre[static_cast<std::size_t>(j - 1)]);
    per = period_;
  }
  return Stream(alphabet_, std::move(pre), std::move(per));
}

Stream Stream::canonicalize() const {
  // Minimal period.
  std::vector<std::size_t> per = period_;
  for (std::size_t d = 1; d <= per.size() / 2; ++d) {
    if (per.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t k = d; k < per.size() && ok; ++k)
      ok = per[k] == per[k % d];
    if (ok) {
      per.resize(d);
      break;
    }
  }
  // Absorb preperiod tail: drop the last preperiod symbol whenever it
  // matches the symbol one full period before the cycle start.
  std::vector<std::size_t> pre = preperiod_;
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.begin(), per.end() - 1, per.end());
    pre.pop_back();
  }
  return Stream(alphabet_, std::move(pre), std::move(per));
}

bool Stream::equivalent(const Stream& a, const Stream& b) {
  const std::uint64_t lcm =
      std::lcm<std::uint64_t>(a.period_.size(), b.period_.size());
  const std::uint64_t horizon =
      a.preperiod_.size() + b.preperiod_.size() + 2 * lcm;
  for (std::uint64_t n = 1; n <= horizon; ++n)
    if (a.value_at(n) != b.value_at(n)) return false;
  return true;
}

}  // namespace egini
