#include "tricode/distill.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tricode {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Initial state of the substream for one trial: decorrelates trials without
/// any sequential dependence, so trial order / parallel split can't matter.
std::uint64_t substream_state(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
  return splitmix64(s);
}

double uniform01(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

/// Sum_w coeff[w] p^w (1-p)^(n-w), evaluated in double. Coefficients are
/// exact integers; the conversion is the only rounding step.
double poly_prob(const std::vector<BigCount>& coeff, std::size_t n, double p) {
  double total = 0.0;
  for (std::size_t w = 0; w < coeff.size(); ++w) {
    if (coeff[w] == 0) continue;
    total += coeff[w].convert_to<double>() * std::pow(p, double(w)) *
             std::pow(1.0 - p, double(n - w));
  }
  return total;
}

double binomial_std_error(double phat, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(std::max(phat * (1.0 - phat), 0.0) / double(n));
}

}  // namespace

BinaryVector z_syndrome(const CssCode& q, const BinaryVector& e) {
  if (e.size() != q.n) throw std::invalid_argument("z_syndrome: length mismatch");
  BinaryVector s(q.x_stab.rows());
  for (std::size_t i = 0; i < q.x_stab.rows(); ++i) s.set(i, q.x_stab.row(i).dot(e));
  return s;
}

bool is_logical_z(const CssCode& q, const BinaryVector& e) {
  if (!z_syndrome(q, e).is_zero())
    throw std::invalid_argument("is_logical_z: pattern has a nonzero syndrome");
  return !rowspace_contains(q.z_stab, e);
}

UndetectableCount count_undetectable(const CssCode& q, std::size_t w) {
  if (w > q.n) throw std::invalid_argument("count_undetectable: weight exceeds length");
  // C(n, w) patterns; cap the enumeration so a bad call can't spin forever.
  BigCount patterns = 1;
  for (std::size_t i = 0; i < w; ++i) patterns = patterns * (q.n - i) / (i + 1);
  if (patterns > BigCount(1) << 26)
    throw std::invalid_argument("count_undetectable: too many weight-" + std::to_string(w) +
                                " patterns to enumerate");

  ReducedBasis x_rows(q.x_stab), z_rows(q.z_stab);
  UndetectableCount out;
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    BinaryVector e(q.n);
    for (std::size_t i : idx) e.set(i, true);
    bool trivial = true;
    for (std::size_t r = 0; r < q.x_stab.rows() && trivial; ++r)
      trivial = !q.x_stab.row(r).dot(e);
    if (trivial) {
      ++out.trivial_syndrome;
      if (!z_rows.contains(e)) ++out.logical;
    }
    // next combination in lexicographic order
    if (w == 0) break;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == q.n - w + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

BlockAnalysis analyze_block(const CssCode& q, std::size_t limit) {
  BlockAnalysis b;
  b.n = q.n;
  // Accepted patterns = trivial syndrome against every X-stabilizer, i.e. the
  // nullspace of x_stab. Z-stabilizers themselves are always accepted and act
  // trivially, so the harmless subset is exactly rowspace(z_stab).
  b.accept = weight_enumerator(nullspace(q.x_stab), limit);
  std::vector<BigCount> harmless = weight_enumerator(q.z_stab, limit);
  b.fail = b.accept;
  for (std::size_t w = 0; w < harmless.size(); ++w) {
    b.fail[w] -= harmless[w];
    if (b.fail[w] < 0)
      throw std::logic_error("analyze_block: Z-stabilizers not contained in accept space");
  }
  return b;
}

double exact_accept_prob(const BlockAnalysis& b, double p) {
  return poly_prob(b.accept, b.n, p);
}

double exact_output_error(const BlockAnalysis& b, double p) {
  double acc = poly_prob(b.accept, b.n, p);
  if (acc <= 0.0) throw std::domain_error("exact_output_error: acceptance probability is zero");
  return poly_prob(b.fail, b.n, p) / acc;
}

double find_threshold(const BlockAnalysis& b) {
  auto f = [&](double p) { return exact_output_error(b, p) - p; };

  // Degenerate block (no protection at all): output error tracks input error
  // identically, so every p is a fixed point and no threshold exists.
  if (std::fabs(f(0.1)) < 1e-13 && std::fabs(f(0.2)) < 1e-13 && std::fabs(f(0.3)) < 1e-13)
    throw std::invalid_argument("find_threshold: output error equals input error identically");

  constexpr double kLo = 1e-6, kHi = 0.5;
  constexpr int kGrid = 2000;
  if (f(kLo) >= 0.0) return 0.0;  // error never improves, even at tiny p
  double lo = kLo, hi = kHi;
  bool bracketed = false;
  for (int i = 1; i <= kGrid; ++i) {
    double p = kLo + (kHi - kLo) * double(i) / kGrid;
    if (f(p) >= 0.0) {
      lo = kLo + (kHi - kLo) * double(i - 1) / kGrid;
      hi = p;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) return kHi;  // p = 0.5 itself is the first fixed point
  while (hi - lo > 1e-6) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double toffoli_threshold(double p_eps) { return 3.0 * p_eps * (1.0 - p_eps) * (1.0 - p_eps); }

DistillationReport exact_distill(const HybridSystem& sys, const ErrorModel& em,
                                 std::size_t limit) {
  DistillationReport rep;
  rep.mode = "exact";
  rep.p = em.p;
  const CssCode* blocks[3] = {&sys.block1, &sys.block2, &sys.block3};
  rep.accept_prob = 1.0;
  double pass_all = 1.0;
  for (const CssCode* q : blocks) {
    BlockAnalysis b = analyze_block(*q, limit);
    rep.accept_prob *= exact_accept_prob(b, em.p);
    double eps = exact_output_error(b, em.p);
    rep.output_error_per_block.push_back(eps);
    pass_all *= 1.0 - eps;
  }
  rep.combined_output_error = 1.0 - pass_all;
  return rep;
}

DistillationReport monte_carlo(const HybridSystem& sys, const ErrorModel& em,
                               std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("monte_carlo: need at least one trial");
  DistillationReport rep;
  rep.mode = "mc";
  rep.p = em.p;
  rep.trials = trials;
  rep.seed = seed;
  rep.rng = "splitmix64; per-trial substream from mix(seed, trial_index)";

  const CssCode* blocks[3] = {&sys.block1, &sys.block2, &sys.block3};
  ReducedBasis z_rows1(sys.block1.z_stab), z_rows2(sys.block2.z_stab),
      z_rows3(sys.block3.z_stab);
  const ReducedBasis* z_rows[3] = {&z_rows1, &z_rows2, &z_rows3};

  std::uint64_t accepted = 0, any_logical = 0;
  std::uint64_t logical[3] = {0, 0, 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t state = substream_state(seed, t);
    bool all_trivial = true;
    bool block_logical[3] = {false, false, false};
    for (int bi = 0; bi < 3; ++bi) {
      const CssCode& q = *blocks[bi];
      BinaryVector e(q.n);
      for (std::size_t j = 0; j < q.n; ++j)
        if (uniform01(state) < em.p) e.set(j, true);
      if (!z_syndrome(q, e).is_zero()) {
        all_trivial = false;  // keep drawing so the stream stays aligned
      } else if (!z_rows[bi]->contains(e)) {
        block_logical[bi] = true;
      }
    }
    if (!all_trivial) continue;
    ++accepted;
    bool any = false;
    for (int bi = 0; bi < 3; ++bi)
      if (block_logical[bi]) { ++logical[bi]; any = true; }
    if (any) ++any_logical;
  }

  rep.accept_prob = double(accepted) / double(trials);
  rep.accept_std_error = binomial_std_error(rep.accept_prob, trials);
  for (int bi = 0; bi < 3; ++bi) {
    double eps = accepted ? double(logical[bi]) / double(accepted) : 0.0;
    rep.output_error_per_block.push_back(eps);
    rep.output_error_std.push_back(binomial_std_error(eps, accepted));
  }
  rep.combined_output_error = accepted ? double(any_logical) / double(accepted) : 0.0;
  rep.combined_output_error_std = binomial_std_error(rep.combined_output_error, accepted);
  return rep;
}

DistillationModel exact_hybrid_model(const BlockAnalysis& qt_block,
                                     const BlockAnalysis& qx_block) {
  DistillationModel m;
  m.name = "exact-hybrid";
  m.output_error = [qt_block](double p) { return exact_output_error(qt_block, p); };
  m.round_accept = [qt_block, qx_block](double p) {
    double at = exact_accept_prob(qt_block, p);
    return at * at * exact_accept_prob(qx_block, p);
  };
  m.threshold = find_threshold(qt_block);
  return m;
}

DistillationModel family_3k8_model(int k) {
  if (k < 1) throw std::invalid_argument("family_3k8_model: k must be >= 1");
  DistillationModel m;
  m.name = "family-3k8(k=" + std::to_string(k) + ")";
  m.output_error = [k](double p) { return (1.0 + 3.0 * k) * p * p; };
  m.round_accept = [k](double p) {
    double a = std::max(0.0, 1.0 - (3.0 * k + 8.0) * p);
    return a * a * a;
  };
  m.threshold = 1.0 / (1.0 + 3.0 * k);
  return m;
}

DistillationModel leading_order_model() {
  DistillationModel m;
  m.name = "leading-order-15to1";
  m.output_error = [](double p) { return 35.0 * p * p * p; };
  m.round_accept = [](double) { return 1.0; };
  m.threshold = 1.0 / std::sqrt(35.0);
  return m;
}

std::vector<LevelTrace> iterate_levels(double p0, double target,
                                       const DistillationModel& model) {
  if (!(p0 > 0.0) || !(target > 0.0))
    throw std::invalid_argument("iterate_levels: p0 and target must be positive");
  if (p0 >= model.threshold)
    throw std::invalid_argument("iterate_levels: p0 is at or above the threshold of " +
                                model.name);
  std::vector<LevelTrace> trace;
  double p = p0;
  while (!target_reached(p, target)) {
    if (trace.size() >= 32)
      throw std::runtime_error("iterate_levels: target not reached within 32 levels");
    LevelTrace lt;
    lt.level = int(trace.size()) + 1;
    lt.input_error = p;
    lt.accept_prob = model.round_accept(p);
    p = model.output_error(p);
    lt.output_error = p;
    trace.push_back(lt);
  }
  return trace;
}

FamilyPoint family_3k8(int k, double p) {
  if (k < 1) throw std::invalid_argument("family_3k8: k must be >= 1");
  if (!((3.0 * k + 8.0) * p < 1.0))
    throw std::domain_error("family_3k8: requires (3k+8) p < 1");
  FamilyPoint fp;
  fp.accept = 1.0 - (3.0 * k + 8.0) * p;
  fp.output_error = (1.0 + 3.0 * k) * p * p;
  return fp;
}

}  // namespace tricode
