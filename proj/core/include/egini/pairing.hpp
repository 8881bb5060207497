#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egini/index_set.hpp"

namespace egini {

// Partner table for one block of length h. Entry m holds the 0-based
// offset exchanged with m, or nullopt when offset m takes no part in any
// transfer. A valid block is a fixed-point-free partial involution.
using BlockInvolution = std::vector<std::optional<std::size_t>>;

struct PairingViolation {
  std::uint64_t block;  // 1-based position in the block layout
  std::size_t offset;
  std::string what;
};

struct PairingValidation {
  std::vector<PairingViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Block-periodic fixed-step pairing function: a partial involution on the
// positive naturals that never maps outside the block ((n-1)h, nh]
// containing its argument. Global 1-based indices at the API surface,
// 0-based offsets inside blocks.
class PairingFunction {
 public:
  // Structural checks only (lengths and offset ranges); the involution
  // property is checked by validate() so generators can filter.
  PairingFunction(std::size_t step, std::vector<BlockInvolution> preperiod,
                  std::vector<BlockInvolution> period);

  // Adjacent offsets swapped within every block: (0 1)(2 3)...; for odd h
  // the last offset is unpaired.
  static PairingFunction adjacent_swap(std::size_t step);

  std::size_t step() const { return step_; }
  const std::vector<BlockInvolution>& block_preperiod() const {
    return preperiod_;
  }
  const std::vector<BlockInvolution>& block_period() const { return period_; }

  // Involution per block, no fixed points, entries mutually consistent.
  PairingValidation validate() const;

  // Partner of global index k (1-based), or nullopt when k is unpaired.
  std::optional<std::uint64_t> apply(std::uint64_t k) const;

  // dom(α) as a periodic indicator set with the same block layout.
  IndexSet domain() const;

  const BlockInvolution& block_at(std::uint64_t block_number) const;

 private:
  std::size_t step_;
  std::vector<BlockInvolution> preperiod_;
  std::vector<BlockInvolution> period_;
};

}  // namespace egini
