#include "egini/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egini {

namespace {

const Rational kTwoFifths(2, 5);

std::uint64_t lcm3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return std::lcm(std::lcm(a, b), c);
}

// Union alphabet min_gap of the two streams; nullopt when fewer than two
// distinct values occur.
std::optional<Rational> ambient_min_gap(const Stream& a, const Stream& b) {
  std::vector<Rational> vals = a.alphabet().values();
  const auto& bv = b.alphabet().values();
  vals.insert(vals.end(), bv.begin(), bv.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (vals.size() < 2) return std::nullopt;
  Rational gap = vals[1] - vals[0];
  for (std::size_t i = 2; i < vals.size(); ++i)
    gap = std::min(gap, Rational(vals[i] - vals[i - 1]));
  return gap;
}

}  // namespace

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "pd") return Variant::PD;
  if (name == "gpd") return Variant::GPD;
  if (name == "s-gpd") return Variant::SGPD;
  if (name == "ipd") return Variant::IPD;
  if (name == "apd") return Variant::APD;
  if (name == "wpd") return Variant::WPD;
  if (name == "s-apd") return Variant::SAPD;
  return std::nullopt;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::PD: return "pd";
    case Variant::GPD: return "gpd";
    case Variant::SGPD: return "s-gpd";
    case Variant::IPD: return "ipd";
    case Variant::APD: return "apd";
    case Variant::WPD: return "wpd";
    case Variant::SAPD: return "s-apd";
  }
  return "?";
}

TransferCertificate verify_transfer(const TransferInstance& inst, Variant v) {
  if (!inst.alpha.validate().ok())
    throw std::invalid_argument("pairing function is not a valid involution");

  TransferCertificate cert;
  cert.variant = v;
  const std::uint64_t h = inst.alpha.step();
  const std::size_t b_pre = inst.alpha.block_preperiod().size();
  const std::size_t b_per = inst.alpha.block_period().size();
  const IndexSet dom = inst.alpha.domain();
  cert.dom_density = dom.density();
  if (v == Variant::SGPD || v == Variant::SAPD) cert.step = h;

  // Horizon covering every (stream phase, pairing phase) combination.
  const std::uint64_t L =
      lcm3(inst.unequal.period().size(), inst.equal.period().size(), h * b_per);
  const std::uint64_t q0 = std::max<std::uint64_t>(
      {inst.unequal.preperiod().size(), inst.equal.preperiod().size(),
       h * b_pre});
  const std::uint64_t horizon = ((q0 + L - 1) / L + 2) * L;

  const auto gap = ambient_min_gap(inst.unequal, inst.equal);

  for (std::uint64_t k = 1; k <= horizon; ++k) {
    const auto partner = inst.alpha.apply(k);
    const Rational& xk = inst.unequal.value_at(k);
    const Rational& yk = inst.equal.value_at(k);
    if (!partner) {
      if (xk != yk)
        cert.violations.push_back({k, "streams differ off dom(alpha)"});
      continue;
    }
    const std::uint64_t p = *partner;
    if (p < k) continue;  // each pair checked once, from its lower end
    const Rational& xp = inst.unequal.value_at(p);
    const Rational& yp = inst.equal.value_at(p);
    const bool up = xk < yk && yk < yp && yp < xp;
    const bool down = xp < yp && yp < yk && yk < xk;
    if (!up && !down) {
      cert.violations.push_back({k, "ordering chain broken for pair"});
      continue;
    }
    const Rational eps_k = abs(Rational(xk - yk));
    const Rational eps_p = abs(Rational(xp - yp));
    if (eps_k != eps_p) {
      cert.violations.push_back({k, "epsilon mismatch across pair (leaky)"});
      continue;
    }
    if (xk + xp != yk + yp) {
      cert.violations.push_back({k, "pair total not conserved"});
      continue;
    }
    if (gap && eps_k < *gap)
      cert.violations.push_back({k, "epsilon below alphabet min_gap"});
    if (k <= q0 + L) cert.epsilons.emplace(k, eps_k);
  }

  // Side conditions per variant.
  std::uint64_t paired_pre = 0, paired_per = 0, total_offsets_pre = 0,
                total_offsets_per = 0;
  for (const auto& b : inst.alpha.block_preperiod()) {
    total_offsets_pre += b.size();
    for (const auto& e : b) paired_pre += e.has_value() ? 1 : 0;
  }
  for (const auto& b : inst.alpha.block_period()) {
    total_offsets_per += b.size();
    for (const auto& e : b) paired_per += e.has_value() ? 1 : 0;
  }
  if (paired_pre + paired_per == 0)
    cert.violations.push_back({0, "empty dom(alpha): no transfer occurs"});

  switch (v) {
    case Variant::PD:
      if (!(paired_per == 0 && paired_pre == 2))
        cert.violations.push_back({0, "PD requires exactly one transacting pair"});
      break;
    case Variant::GPD:
    case Variant::SGPD:
      break;  // fixed-step holds by construction for block-periodic alpha
    case Variant::IPD:
      if (paired_per == 0)
        cert.violations.push_back({0, "IPD requires infinite dom(alpha)"});
      break;
    case Variant::APD:
    case Variant::SAPD:
      if (!(cert.dom_density.lower > 0))
        cert.violations.push_back({0, "requires d(dom(alpha)) > 0"});
      break;
    case Variant::WPD:
      if (paired_pre != total_offsets_pre || paired_per != total_offsets_per)
        cert.violations.push_back({0, "WPD requires dom(alpha) = N"});
      break;
  }

  cert.valid = cert.violations.empty();
  return cert;
}

EpsRule constant_eps(Rational eps) {
  return [eps = std::move(eps)](std::uint64_t, std::uint64_t, const Rational&,
                                const Rational&) { return eps; };
}

TransferInstance apply_transfers(const Stream& equal,
                                 const PairingFunction& alpha,
                                 const EpsRule& eps) {
  if (!alpha.validate().ok())
    throw std::invalid_argument("pairing function is not a valid involution");
  const std::uint64_t h = alpha.step();
  const std::uint64_t L =
      std::lcm<std::uint64_t>(equal.period().size(),
                              h * std::max<std::size_t>(alpha.block_period().size(), 1));
  const std::uint64_t q0 = std::max<std::uint64_t>(
      equal.preperiod().size(), h * alpha.block_preperiod().size());
  const std::uint64_t q = ((q0 + L - 1) / L) * L;

  const Alphabet& a = equal.alphabet();
  std::vector<std::size_t> pre_idx, per_idx;
  bool any_pair = false;
  for (std::uint64_t n = 1; n <= q + L; ++n) {
    const Rational& yn = equal.value_at(n);
    Rational xn = yn;
    if (const auto partner = alpha.apply(n)) {
      any_pair = true;
      const Rational& yp = equal.value_at(*partner);
      if (yn == yp)
        throw std::domain_error("paired positions carry equal values; nothing to widen");
      const Rational e = eps(std::min(n, *partner), std::max(n, *partner),
                             std::min(yn, yp), std::max(yn, yp));
      if (!(e > 0)) throw std::domain_error("epsilon must be positive");
      xn = yn < yp ? Rational(yn - e) : Rational(yn + e);
    }
    const auto idx = a.index_of(xn);
    if (!idx)
      throw std::domain_error("widened value leaves the alphabet");
    (n <= q ? pre_idx : per_idx).push_back(*idx);
  }
  if (!any_pair) throw std::domain_error("pairing has empty domain");
  Stream unequal(a, std::move(pre_idx), std::move(per_idx));
  return TransferInstance{std::move(unequal), equal, alpha};
}

AnonymityReport check_anonymity(const Stream& s, std::uint64_t i,
                                std::uint64_t j) {
  const Stream swapped = s.swap_coordinates(i, j);
  AnonymityReport report;
  report.w_original = welfare_exact(s);
  report.w_swapped = welfare_exact(swapped);
  report.welfare_equal = report.w_original == report.w_swapped;

  const std::uint64_t m = std::max(i, j);
  const std::uint64_t L = std::lcm<std::uint64_t>(s.period().size(),
                                                  swapped.period().size());
  const std::uint64_t last = m + 2 * L + 8;
  report.first_horizon = m;
  report.prefix_invariant = true;
  PairwiseDistanceAccumulator acc_s, acc_w;
  for (std::uint64_t n = 1; n <= last; ++n) {
    acc_s.insert(s.value_at(n));
    acc_w.insert(swapped.value_at(n));
    if (n < m) continue;
    ++report.horizons_checked;
    if (acc_s.raw() != acc_w.raw()) report.prefix_invariant = false;
  }
  return report;
}

std::vector<Prop1Row> prop1_bound_trace(const TransferInstance& inst,
                                        std::uint64_t N_max) {
  if (N_max == 0) throw std::invalid_argument("N_max must be positive");
  const std::uint64_t h = inst.alpha.step();
  const IndexSet dom = inst.alpha.domain();
  std::vector<Prop1Row> rows;
  rows.reserve(static_cast<std::size_t>(N_max));
  PairwiseDistanceAccumulator acc_x, acc_y;
  std::optional<Rational> eps_min;
  std::uint64_t n = 1;
  for (std::uint64_t N = 1; N <= N_max; ++N) {
    for (std::uint64_t i = 0; i < h; ++i, ++n) {
      const Rational& xv = inst.unequal.value_at(n);
      const Rational& yv = inst.equal.value_at(n);
      acc_x.insert(xv);
      acc_y.insert(yv);
      if (dom.contains(n)) {
        Rational e = abs(Rational(xv - yv));
        if (!eps_min || e < *eps_min) eps_min = std::move(e);
      }
    }
    Prop1Row row;
    row.N = N;
    row.horizon = N * h;
    row.raw_unequal = acc_x.raw();
    row.raw_equal = acc_y.raw();
    row.dom_count = dom.prefix_count(row.horizon);
    row.eps_min = eps_min.value_or(Rational(0));
    row.bound = row.raw_equal +
                kTwoFifths * row.eps_min *
                    Rational(BigInt(row.dom_count) * row.dom_count);
    row.slack = row.raw_unequal - row.bound;
    row.holds = row.slack >= 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

Prop1Row prop1_bound_check(const TransferInstance& inst, std::uint64_t N) {
  return prop1_bound_trace(inst, N).back();
}

Case4Report case4_inequality_check(const Case4Config& cfg) {
  if (!(cfg.eps_k > 0) || !(cfg.eps_j > 0))
    throw std::invalid_argument("epsilons must be positive");
  if (!(cfg.y_alpha_k < cfg.y_k))
    throw std::invalid_argument("pair k must widen upward: y_alpha_k < y_k");
  if (!(cfg.y_j < cfg.y_alpha_j))
    throw std::invalid_argument("pair j must widen downward: y_j < y_alpha_j");

  const Rational xk = cfg.y_k + cfg.eps_k;
  const Rational xak = cfg.y_alpha_k - cfg.eps_k;
  const Rational xj = cfg.y_j - cfg.eps_j;
  const Rational xaj = cfg.y_alpha_j + cfg.eps_j;

  auto five = [](const Rational& k, const Rational& ak, const Rational& j,
                 const Rational& aj) -> Rational {
    return abs(Rational(k - j)) + abs(Rational(k - aj)) +
           abs(Rational(j - ak)) + abs(Rational(ak - aj)) +
           abs(Rational(j - aj));
  };

  Case4Report report;
  report.x_sum = five(xk, xak, xj, xaj);
  report.y_sum = five(cfg.y_k, cfg.y_alpha_k, cfg.y_j, cfg.y_alpha_j);
  report.correction = 2 * std::min(cfg.eps_j, cfg.eps_k);
  report.slack = report.x_sum - report.y_sum - report.correction;
  report.holds = report.slack >= 0;
  return report;
}

Case4ScanResult case4_scan(int value_max, int eps_max) {
  if (value_max < 2) throw std::invalid_argument("value_max must be >= 2");
  if (eps_max < 1) throw std::invalid_argument("eps_max must be >= 1");
  Case4ScanResult result;
  for (int yk = 1; yk <= value_max; ++yk)
    for (int yak = 1; yak < yk; ++yak)
      for (int yj = 1; yj <= value_max; ++yj)
        for (int yaj = yj + 1; yaj <= value_max; ++yaj)
          for (int ek = 1; ek <= eps_max; ++ek)
            for (int ej = 1; ej <= eps_max; ++ej) {
              Case4Config cfg{Rational(yk),  Rational(ek), Rational(yak),
                              Rational(yj),  Rational(ej), Rational(yaj)};
              const Case4Report r = case4_inequality_check(cfg);
              ++result.configurations;
              if (!r.holds) ++result.violations;
              if (!result.worst_slack || r.slack < *result.worst_slack)
                result.worst_slack = r.slack;
            }
  return result;
}

CaseDecomposition case_decomposition_check(const TransferInstance& inst,
                                           std::uint64_t N) {
  const std::uint64_t h = inst.alpha.step();
  const std::uint64_t H = N * h;
  const std::size_t n = static_cast<std::size_t>(H);
  std::vector<Rational> x = inst.unequal.prefix(H);
  std::vector<Rational> y = inst.equal.prefix(H);
  std::vector<std::uint64_t> partner(n, 0);
  for (std::uint64_t k = 1; k <= H; ++k)
    if (const auto p = inst.alpha.apply(k)) partner[k - 1] = *p;

  CaseDecomposition out;
  out.horizon = H;
  out.case1_identity_ok = out.case2_equal_ok = out.case3_cancel_ok = true;
  Rational case3_sum = 0;
  Rational total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = k + 1; j < n; ++j) {
      const Rational dx = abs(Rational(x[k] - x[j]));
      const Rational dy = abs(Rational(y[k] - y[j]));
      const Rational diff = dx - dy;
      total += diff;
      const bool kp = partner[k] != 0, jp = partner[j] != 0;
      if (kp && partner[k] == j + 1) {
        ++out.case1_pairs;
        const Rational eps = abs(Rational(x[k] - y[k]));
        if (dx != dy + 2 * eps) out.case1_identity_ok = false;
      } else if (!kp && !jp) {
        ++out.case2_pairs;
        if (diff != 0) out.case2_equal_ok = false;
      } else if (kp != jp) {
        ++out.case3_pairs;
        case3_sum += diff;
      } else {
        ++out.case4_pairs;
      }
    }
  }
  // Case 3 cancellation: for unpaired j and a transacting pair (k, α(k)),
  // the two mixed combinations compensate exactly.
  for (std::size_t k = 0; k < n && out.case3_cancel_ok; ++k) {
    if (partner[k] == 0 || partner[k] <= k + 1) continue;
    const std::size_t p = static_cast<std::size_t>(partner[k] - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (partner[j] != 0) continue;
      const Rational xs = abs(Rational(x[j] - x[k])) + abs(Rational(x[j] - x[p]));
      const Rational ys = abs(Rational(y[j] - y[k])) + abs(Rational(y[j] - y[p]));
      if (xs != ys) {
        out.case3_cancel_ok = false;
        break;
      }
    }
  }
  if (case3_sum != 0) out.case3_cancel_ok = false;

  const Rational raw_x = double_sum_fast(x);
  const Rational raw_y = double_sum_fast(y);
  out.total_difference = raw_x - raw_y;
  out.total_matches = 2 * total == out.total_difference;
  return out;
}

std::vector<Prop2Row> prop2_probe(std::uint64_t K) {
  if (K == 0) throw std::invalid_argument("K must be positive");
  std::vector<Prop2Row> rows;
  rows.reserve(static_cast<std::size_t>(K));
  const Rational half(1, 2);
  for (std::uint64_t k = 1; k <= K; ++k) {
    const Rational outer(1, k + 1);
    const Rational inner(1, k + 2);
    Prop2Row row;
    row.k = k;
    row.eps = outer - inner;
    const Stream unequal = Stream::from_values(
        {}, {half - outer, half + outer});
    const Stream equal = Stream::from_values(
        {}, {half - inner, half + inner});
    row.w_unequal = welfare_exact(unequal);
    row.w_equal = welfare_exact(equal);
    row.gap = row.w_equal - row.w_unequal;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// A widening quadruple inside an alphabet: equal values (y_lo, y_hi) and
// unequal values (x_lo, x_hi) with y_lo − x_lo = x_hi − y_hi = eps.
struct Quadruple {
  Rational x_lo, y_lo, y_hi, x_hi, eps;
};

std::vector<Quadruple> widening_quadruples(const Alphabet& a) {
  std::vector<Quadruple> out;
  const auto& v = a.values();
  const std::size_t m = v.size();
  for (std::size_t xl = 0; xl < m; ++xl)
    for (std::size_t yl = xl + 1; yl < m; ++yl)
      for (std::size_t yh = yl + 1; yh < m; ++yh)
        for (std::size_t xh = yh + 1; xh < m; ++xh)
          if (v[yl] - v[xl] == v[xh] - v[yh])
            out.push_back({v[xl], v[yl], v[yh], v[xh],
                           Rational(v[yl] - v[xl])});
  return out;
}

Alphabet random_alphabet(std::mt19937_64& rng, std::size_t max_size) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> size_dist(4, max_size);
  for (;;) {
    const std::size_t m = size_dist(rng);
    std::vector<Rational> vals;
    if (coin(rng)) {
      // Arithmetic progression: always admits widening quadruples.
      std::uniform_int_distribution<int> start(-4, 4), den(1, 3), gap(1, 3);
      const Rational g(gap(rng), den(rng));
      Rational v(start(rng));
      for (std::size_t i = 0; i < m; ++i, v += g) vals.push_back(v);
    } else {
      std::uniform_int_distribution<int> num(-8, 8), den(1, 4);
      while (vals.size() < m) {
        Rational v(num(rng), den(rng));
        if (std::find(vals.begin(), vals.end(), v) == vals.end())
          vals.push_back(v);
      }
      std::sort(vals.begin(), vals.end());
    }
    Alphabet a(vals);
    if (!widening_quadruples(a).empty()) return a;
  }
}

BlockInvolution random_block(std::mt19937_64& rng, std::size_t h,
                             bool force_pair) {
  std::vector<std::size_t> offsets(h);
  std::iota(offsets.begin(), offsets.end(), 0);
  std::shuffle(offsets.begin(), offsets.end(), rng);
  std::uniform_int_distribution<std::size_t> pairs_dist(force_pair ? 1 : 0,
                                                        h / 2);
  const std::size_t pairs = pairs_dist(rng);
  BlockInvolution block(h);
  for (std::size_t t = 0; t < pairs; ++t) {
    block[offsets[2 * t]] = offsets[2 * t + 1];
    block[offsets[2 * t + 1]] = offsets[2 * t];
  }
  return block;
}

}  // namespace

TransferInstance random_sapd_instance(std::mt19937_64& rng,
                                      const InstanceGenOptions& opts) {
  const Alphabet alpha_set = random_alphabet(rng, opts.max_alphabet);
  const auto quads = widening_quadruples(alpha_set);

  std::uniform_int_distribution<std::size_t> step_dist(2, opts.max_step);
  std::uniform_int_distribution<std::size_t> per_dist(1, opts.max_period_blocks);
  std::uniform_int_distribution<std::size_t> pre_dist(0, opts.max_preperiod_blocks);
  const std::size_t h = step_dist(rng);
  const std::size_t b_per = per_dist(rng);
  const std::size_t b_pre = pre_dist(rng);

  std::vector<BlockInvolution> pre_blocks, per_blocks;
  for (std::size_t i = 0; i < b_pre; ++i)
    pre_blocks.push_back(random_block(rng, h, false));
  for (std::size_t i = 0; i < b_per; ++i)
    per_blocks.push_back(random_block(rng, h, /*force_pair=*/i == 0));
  PairingFunction pairing(h, pre_blocks, per_blocks);

  std::uniform_int_distribution<std::size_t> quad_dist(0, quads.size() - 1);
  std::uniform_int_distribution<std::size_t> val_dist(0, alpha_set.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  // Equal stream values per layout block, with the per-pair epsilons the
  // transfer rule will hand back to apply_transfers.
  std::vector<std::size_t> pre_idx, per_idx;
  std::map<std::uint64_t, Rational> eps_by_slot;  // layout-block*h + min offset
  auto fill_block = [&](const BlockInvolution& block, std::size_t layout,
                        std::vector<std::size_t>& out) {
    std::vector<std::size_t> vals(h);
    std::vector<bool> done(h, false);
    for (std::size_t m = 0; m < h; ++m) {
      if (done[m]) continue;
      if (block[m] && *block[m] > m) {
        const std::size_t p = *block[m];
        const Quadruple& quad = quads[quad_dist(rng)];
        const bool lo_first = coin(rng) != 0;
        vals[m] = *alpha_set.index_of(lo_first ? quad.y_lo : quad.y_hi);
        vals[p] = *alpha_set.index_of(lo_first ? quad.y_hi : quad.y_lo);
        eps_by_slot[layout * h + m] = quad.eps;
        done[m] = done[p] = true;
      } else if (!block[m]) {
        vals[m] = val_dist(rng);
        done[m] = true;
      }
    }
    out.insert(out.end(), vals.begin(), vals.end());
  };
  for (std::size_t i = 0; i < b_pre; ++i)
    fill_block(pre_blocks[i], i, pre_idx);
  for (std::size_t i = 0; i < b_per; ++i)
    fill_block(per_blocks[i], b_pre + i, per_idx);

  Stream equal(alpha_set, pre_idx, per_idx);

  EpsRule rule = [eps_by_slot, h, b_pre, b_per](
                     std::uint64_t k, std::uint64_t, const Rational&,
                     const Rational&) {
    const std::uint64_t block_number = (k - 1) / h + 1;
    const std::uint64_t layout =
        block_number <= b_pre ? block_number - 1
                              : b_pre + (block_number - b_pre - 1) % b_per;
    const std::uint64_t slot = layout * h + (k - 1) % h;
    return eps_by_slot.at(slot);
  };
  return apply_transfers(equal, pairing, rule);
}

}  // namespace egini
