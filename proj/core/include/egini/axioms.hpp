#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "egini/gini.hpp"
#include "egini/pairing.hpp"
#include "egini/stream.hpp"

namespace egini {

enum class Variant { PD, GPD, SGPD, IPD, APD, WPD, SAPD };

std::optional<Variant> variant_from_name(const std::string& name);
std::string variant_name(Variant v);

// A pre/post transfer pair of streams with the pairing that links the
// transacting generations. `unequal` is the wider stream (the proof's
// pre-transfer side); `equal` is the result of the transfers. Per-pair
// epsilons are derived from the streams, never stored.
struct TransferInstance {
  Stream unequal;
  Stream equal;
  PairingFunction alpha;
};

struct CertificateViolation {
  std::uint64_t index;  // 1-based stream position (0 for global conditions)
  std::string what;
};

struct TransferCertificate {
  Variant variant;
  bool valid = false;
  std::vector<CertificateViolation> violations;
  DensityPair dom_density;
  std::optional<std::uint64_t> step;            // declared for s-variants
  std::map<std::uint64_t, Rational> epsilons;   // lower pair index -> ε, one macro-period
};

// Checks the instance invariants (pairwise ordering chains, non-leaky ε
// equalities, agreement off dom(α), ε >= min_gap) plus the variant's side
// condition. Violations are reported, not thrown.
TransferCertificate verify_transfer(const TransferInstance& inst, Variant v);

// ε for the pair (k, p) given the equal stream's values at the two ends.
using EpsRule = std::function<Rational(std::uint64_t k, std::uint64_t partner,
                                       const Rational& y_low,
                                       const Rational& y_high)>;

EpsRule constant_eps(Rational eps);

// Builds the unequal stream by widening every paired gap of `equal` by ε
// on each side. Throws std::domain_error when a widened value leaves the
// alphabet or a pair carries equal values (nothing to widen).
TransferInstance apply_transfers(const Stream& equal,
                                 const PairingFunction& alpha,
                                 const EpsRule& eps);

struct AnonymityReport {
  Rational w_original;
  Rational w_swapped;
  bool welfare_equal = false;
  bool prefix_invariant = false;  // W_n agreement at every checked horizon
  std::uint64_t first_horizon = 0;
  std::uint64_t horizons_checked = 0;
};

AnonymityReport check_anonymity(const Stream& s, std::uint64_t i,
                                std::uint64_t j);

// One row of the quantitative comparison: does the prefix double sum of
// the unequal stream dominate the equal one by (2/5)·ε·D² at H_N = N·h?
struct Prop1Row {
  std::uint64_t N = 0;
  std::uint64_t horizon = 0;
  Rational raw_unequal;
  Rational raw_equal;
  std::uint64_t dom_count = 0;  // |dom(α) ∩ [1, H_N]|
  Rational eps_min;             // min ε over dom ∩ [1, H_N]; 0 when empty
  Rational bound;               // raw_equal + (2/5)·ε·D²
  Rational slack;               // raw_unequal − bound
  bool holds = false;
};

std::vector<Prop1Row> prop1_bound_trace(const TransferInstance& inst,
                                        std::uint64_t N_max);
Prop1Row prop1_bound_check(const TransferInstance& inst, std::uint64_t N);

// One case-4 configuration: two transacting pairs, pair k widened upward
// (x_k = y_k + ε_k, partner pushed down) and pair j widened downward.
struct Case4Config {
  Rational y_k, eps_k, y_alpha_k;
  Rational y_j, eps_j, y_alpha_j;
};

struct Case4Report {
  Rational x_sum;       // five-combination sum over the x values
  Rational y_sum;       // same combinations over the y values
  Rational correction;  // 2·min(ε_j, ε_k)
  Rational slack;       // x_sum − y_sum − correction
  bool holds = false;
};

// Throws std::invalid_argument when the configuration violates the
// case-4 ordering preconditions.
Case4Report case4_inequality_check(const Case4Config& cfg);

struct Case4ScanResult {
  std::uint64_t configurations = 0;
  std::uint64_t violations = 0;
  std::optional<Rational> worst_slack;
};

// Exhaustive scan of the five-pair inequality on the integer grid
// {1..value_max} with ε ∈ {1..eps_max}.
Case4ScanResult case4_scan(int value_max, int eps_max);

// Pairwise classification of [1,H_N]² into the proof's four cases, with
// the per-case identities checked and contributions reconciled against
// the double-sum difference.
struct CaseDecomposition {
  std::uint64_t horizon = 0;
  std::uint64_t case1_pairs = 0;  // partners
  std::uint64_t case2_pairs = 0;  // both unpaired
  std::uint64_t case3_pairs = 0;  // exactly one unpaired
  std::uint64_t case4_pairs = 0;  // both paired, different pairs
  bool case1_identity_ok = false;  // |x_j−x_k| = |y_j−y_k| + 2ε
  bool case2_equal_ok = false;
  bool case3_cancel_ok = false;    // {j,k} + {j,α(k)} contributions cancel
  Rational total_difference;       // raw_unequal − raw_equal
  bool total_matches = false;
};

CaseDecomposition case_decomposition_check(const TransferInstance& inst,
                                           std::uint64_t N);

// One row of the infinite-alphabet probe: the transfer family over
// Y ⊇ {1/2 ± 1/(k+1)} whose welfare gaps vanish as k grows.
struct Prop2Row {
  std::uint64_t k = 0;
  Rational eps;        // 1/(k+1) − 1/(k+2)
  Rational w_unequal;  // stream over {1/2 ∓ 1/(k+1)}
  Rational w_equal;    // stream over {1/2 ∓ 1/(k+2)}
  Rational gap;        // w_equal − w_unequal
};

std::vector<Prop2Row> prop2_probe(std::uint64_t K);

// Random valid instances for property campaigns: equal stream drawn
// first, then widened via apply_transfers, so validity holds by
// construction.
struct InstanceGenOptions {
  std::size_t max_step = 8;
  std::size_t max_period_blocks = 6;
  std::size_t max_preperiod_blocks = 2;
  std::size_t max_alphabet = 6;
};

TransferInstance random_sapd_instance(std::mt19937_64& rng,
                                      const InstanceGenOptions& opts = {});

}  // namespace egini
