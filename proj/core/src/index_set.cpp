#include "egini/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace egini {

IndexSet IndexSet::periodic(std::vector<bool> preperiod,
                            std::vector<bool> period) {
  if (period.empty())
    throw std::invalid_argument("periodic index set needs a non-empty period");
  return IndexSet(Periodic{std::move(preperiod), std::move(period)});
}

IndexSet IndexSet::explicit_finite(std::vector<std::uint64_t> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == 0 || (i > 0 && members[i] <= members[i - 1]))
      throw std::invalid_argument("members must be strictly sorted positives");
  }
  return IndexSet(ExplicitFinite{std::move(members)});
}

IndexSet IndexSet::power_sparse(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("power_sparse base must be >= 2");
  return IndexSet(PowerSparse{base});
}

bool IndexSet::contains(std::uint64_t n) const {
  if (n == 0) return false;
  if (const auto* p = std::get_if<Periodic>(&rep_)) {
    if (n <= p->preperiod.size()) return p->preperiod[n - 1];
    return p->period[(n - p->preperiod.size() - 1) % p->period.size()];
  }
  if (const auto* e = std::get_if<ExplicitFinite>(&rep_)) {
    return std::binary_search(e->members.begin(), e->members.end(), n);
  }
  const auto& s = std::get<PowerSparse>(rep_);
  std::uint64_t v = s.base;
  while (v < n && v <= n / s.base) v *= s.base;
  return v == n;
}

std::uint64_t IndexSet::prefix_count(std::uint64_t n) const {
  if (n == 0) return 0;
  if (const auto* p = std::get_if<Periodic>(&rep_)) {
    std::uint64_t count = 0;
    const std::uint64_t q = p->preperiod.size();
    for (std::uint64_t k = 0; k < std::min<std::uint64_t>(q, n); ++k)
      count += p->preperiod[k] ? 1 : 0;
    if (n <= q) return count;
    const std::uint64_t tail = n - q;
    const std::uint64_t len = p->period.size();
    std::uint64_t ones = 0;
    for (bool b : p->period) ones += b ? 1 : 0;
    count += (tail / len) * ones;
    for (std::uint64_t k = 0; k < tail % len; ++k)
      count += p->period[k] ? 1 : 0;
    return count;
  }
  if (const auto* e = std::get_if<ExplicitFinite>(&rep_)) {
    return static_cast<std::uint64_t>(
        std::upper_bound(e->members.begin(), e->members.end(), n) -
        e->members.begin());
  }
  // Powers b, b^2, ... up to n.
  const auto& s = std::get<PowerSparse>(rep_);
  std::uint64_t count = 0;
  for (std::uint64_t v = s.base; v <= n; v *= s.base) {
    ++count;
    if (v > n / s.base) break;
  }
  return count;
}

DensityPair IndexSet::density() const {
  if (const auto* p = std::get_if<Periodic>(&rep_)) {
    std::uint64_t ones = 0;
    for (bool b : p->period) ones += b ? 1 : 0;
    const Rational d(ones, static_cast<std::uint64_t>(p->period.size()));
    return {d, d};
  }
  return {Rational(0), Rational(0)};
}

bool IndexSet::is_empty() const {
  if (const auto* p = std::get_if<Periodic>(&rep_)) {
    return std::none_of(p->preperiod.begin(), p->preperiod.end(),
                        [](bool b) { return b; }) &&
           std::none_of(p->period.begin(), p->period.end(),
                        [](bool b) { return b; });
  }
  if (const auto* e = std::get_if<ExplicitFinite>(&rep_))
    return e->members.empty();
  return false;
}

}  // namespace egini
