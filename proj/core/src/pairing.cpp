#include "egini/pairing.hpp"

#include <stdexcept>

namespace egini {

PairingFunction::PairingFunction(std::size_t step,
                                 std::vector<BlockInvolution> preperiod,
                                 std::vector<BlockInvolution> period)
    : step_(step), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (step_ == 0) throw std::invalid_argument("step must be positive");
  if (period_.empty())
    throw std::invalid_argument("block period must be non-empty");
  auto check_block = [this](const BlockInvolution& b) {
    if (b.size() != step_)
      throw std::invalid_argument("block table length must equal the step");
    for (const auto& e : b)
      if (e && *e >= step_)
        throw std::invalid_argument("partner offset outside block");
  };
  for (const auto& b : preperiod_) check_block(b);
  for (const auto& b : period_) check_block(b);
}

PairingFunction PairingFunction::adjacent_swap(std::size_t step) {
  BlockInvolution block(step);
  for (std::size_t m = 0; m + 1 < step; m += 2) {
    block[m] = m + 1;
    block[m + 1] = m;
  }
  return PairingFunction(step, {}, {block});
}

const BlockInvolution& PairingFunction::block_at(
    std::uint64_t block_number) const {
  if (block_number == 0) throw std::invalid_argument("blocks are 1-indexed");
  if (block_number <= preperiod_.size())
    return preperiod_[static_cast<std::size_t>(block_number - 1)];
  return period_[static_cast<std::size_t>((block_number - preperiod_.size() - 1) %
                                          period_.size())];
}

PairingValidation PairingFunction::validate() const {
  PairingValidation report;
  auto check = [&](const BlockInvolution& b, std::uint64_t block_number) {
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (!b[m]) continue;
      const std::size_t p = *b[m];
      if (p == m) {
        report.violations.push_back({block_number, m, "fixed point"});
      } else if (!b[p] || *b[p] != m) {
        report.violations.push_back({block_number, m, "not an involution"});
      }
    }
  };
  for (std::size_t i = 0; i < preperiod_.size(); ++i)
    check(preperiod_[i], i + 1);
  for (std::size_t i = 0; i < period_.size(); ++i)
    check(period_[i], preperiod_.size() + i + 1);
  return report;
}

std::optional<std::uint64_t> PairingFunction::apply(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("indices are 1-based");
  const std::uint64_t block_number = (k - 1) / step_ + 1;
  const std::size_t offset = static_cast<std::size_t>((k - 1) % step_);
  const BlockInvolution& b = block_at(block_number);
  if (!b[offset]) return std::nullopt;
  return (block_number - 1) * step_ + *b[offset] + 1;
}

IndexSet PairingFunction::domain() const {
  auto flatten = [this](const std::vector<BlockInvolution>& blocks) {
    std::vector<bool> bits;
    bits.reserve(blocks.size() * step_);
    for (const auto& b : blocks)
      for (const auto& e : b) bits.push_back(e.has_value());
    return bits;
  };
  return IndexSet::periodic(flatten(preperiod_), flatten(period_));
}

}  // namespace egini
