#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "egini/rational.hpp"

namespace egini {

// Finite set of admissible utility values, strictly increasing.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& value(std::size_t i) const { return values_.at(i); }
  const std::vector<Rational>& values() const { return values_; }
  std::optional<std::size_t> index_of(const Rational& v) const;

  // Smallest positive difference between distinct values; requires size >= 2.
  Rational min_gap() const;
  Rational diameter() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Rational> values_;
};

// value -> asymptotic frequency; frequencies sum to exactly 1.
using FrequencyTable = std::map<Rational, Rational>;

// Eventually periodic infinite utility sequence, 1-indexed. The finite
// stand-in for elements of Y^N.
class Stream {
 public:
  Stream(Alphabet alphabet, std::vector<std::size_t> preperiod,
         std::vector<std::size_t> period);

  // Builds the alphabet from the distinct values that occur.
  static Stream from_values(const std::vector<Rational>& preperiod,
                            const std::vector<Rational>& period);
  static Stream constant(const Rational& v);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::size_t>& preperiod() const { return preperiod_; }
  const std::vector<std::size_t>& period() const { return period_; }

  // 1-indexed; throws std::invalid_argument on n = 0.
  const Rational& value_at(std::uint64_t n) const;
  std::vector<Rational> prefix(std::uint64_t n) const;

  // Frequency of each alphabet value over one period; preperiod has zero
  // asymptotic weight. Values absent from the period are omitted.
  FrequencyTable frequencies() const;

  // Exchanges positions i and j (i != j); extends the preperiod to cover
  // max(i, j), the tail is untouched.
  Stream swap_coordinates(std::uint64_t i, std::uint64_t j) const;

  // Minimal period, preperiod tail absorbed into the cycle.
  Stream canonicalize() const;

  // Decidable equality of the represented infinite sequences.
  static bool equivalent(const Stream& a, const Stream& b);

 private:
  Alphabet alphabet_;
  std::vector<std::size_t> preperiod_;
  std::vector<std::size_t> period_;
};

}  // namespace egini
