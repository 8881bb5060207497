#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "egini/rational.hpp"

namespace egini {

// Exact lower/upper asymptotic densities of an index set.
struct DensityPair {
  Rational lower;
  Rational upper;

  bool operator==(const DensityPair&) const = default;
};

// Subset of the positive naturals, in one of three finitely-describable
// shapes: eventually periodic indicator, explicit finite set, or the
// powers {b, b^2, b^3, ...} of a base b >= 2.
class IndexSet {
 public:
  struct Periodic {
    std::vector<bool> preperiod;
    std::vector<bool> period;  // non-empty
  };
  struct ExplicitFinite {
    std::vector<std::uint64_t> members;  // strictly sorted, positive
  };
  struct PowerSparse {
    std::uint64_t base;  // >= 2
  };

  static IndexSet periodic(std::vector<bool> preperiod,
                           std::vector<bool> period);
  static IndexSet explicit_finite(std::vector<std::uint64_t> members);
  static IndexSet power_sparse(std::uint64_t base);

  bool contains(std::uint64_t n) const;

  // |S ∩ [1, n]|, exactly.
  std::uint64_t prefix_count(std::uint64_t n) const;

  // Exact asymptotic densities. All three kinds have coinciding lower and
  // upper density; power_sparse is a proven limit 0, not an estimate.
  DensityPair density() const;

  bool is_empty() const;

  const Periodic* as_periodic() const { return std::get_if<Periodic>(&rep_); }

 private:
  using Rep = std::variant<Periodic, ExplicitFinite, PowerSparse>;
  explicit IndexSet(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

}  // namespace egini
