#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/transversality.hpp"

namespace tricode {

/// i.i.d. Z-flip probability per physical qubit, applied once per block
/// after the transversal gate.
struct ErrorModel {
  double p = 0.0;
};

/// Exact weight polynomials of one code block under Z-only noise:
///   accept[w] = #error patterns of weight w with trivial syndrome,
///   fail[w]   = those that additionally act as a logical Z.
struct BlockAnalysis {
  std::size_t n = 0;
  std::vector<BigCount> accept;
  std::vector<BigCount> fail;
};

struct DistillationReport {
  std::string mode;  // "exact" | "mc"
  double p = 0.0;
  double accept_prob = 0.0;
  double accept_std_error = 0.0;           // mc only
  std::vector<double> output_error_per_block;
  std::vector<double> output_error_std;    // mc only
  double combined_output_error = 0.0;      // any-block logical error, given accept
  double combined_output_error_std = 0.0;  // mc only
  std::uint64_t trials = 0;                // mc only
  std::uint64_t seed = 0;                  // mc only
  std::string rng;                         // mc only: algorithm + seeding convention
};

struct LevelTrace {
  int level = 0;
  double input_error = 0.0;
  double output_error = 0.0;
  double accept_prob = 0.0;  // all-blocks acceptance for the round
};

/// Error map + per-round acceptance for one distillation level.
struct DistillationModel {
  std::string name;
  std::function<double(double)> output_error;
  std::function<double(double)> round_accept;
  double threshold = 0.0;
};

/// A level's target counts as reached when p <= kTargetSlack * target; the
/// comparison is deliberately loose by a factor of 2 so that e.g. two 15-to-1
/// rounds from 1e-2 (landing near 1.5e-12) count as reaching 1e-12.
constexpr double kTargetSlack = 2.0;
inline bool target_reached(double p, double target) { return p <= kTargetSlack * target; }

/// Syndrome of Z-error pattern e against the X-stabilizers (length = rows).
BinaryVector z_syndrome(const CssCode& q, const BinaryVector& e);

/// Pre: trivial syndrome. True iff e is not a Z-stabilizer (acts logically).
bool is_logical_z(const CssCode& q, const BinaryVector& e);

struct UndetectableCount {
  std::uint64_t trivial_syndrome = 0;
  std::uint64_t logical = 0;
};

/// Counts weight-w patterns with trivial syndrome / logical action by
/// enumerating all C(n, w) patterns.
UndetectableCount count_undetectable(const CssCode& q, std::size_t w);

BlockAnalysis analyze_block(const CssCode& q, std::size_t limit = kDefaultEnumerationLimit);

double exact_accept_prob(const BlockAnalysis& b, double p);
/// P(logical Z | accepted).
double exact_output_error(const BlockAnalysis& b, double p);

/// Smallest fixed point of exact_output_error in (1e-6, 0.5): grid-scan for
/// the first sign change of err(p) - p, then bisect to 1e-6.
double find_threshold(const BlockAnalysis& b);

/// 3 p (1-p)^2: tolerable Toffoli-gate error when each of the three injection
/// errors must stay below the code threshold p_eps.
double toffoli_threshold(double p_eps);

/// Exact three-block report for (block1, block2, block3) under i.i.d. Z noise.
DistillationReport exact_distill(const HybridSystem& sys, const ErrorModel& em,
                                 std::size_t limit = kDefaultEnumerationLimit);

/// Monte Carlo of the same protocol. RNG: splitmix64, one substream per trial
/// seeded with mix(seed, trial index) - reproducible and worker-independent.
DistillationReport monte_carlo(const HybridSystem& sys, const ErrorModel& em,
                               std::uint64_t trials, std::uint64_t seed);

/// Model factories.
DistillationModel exact_hybrid_model(const BlockAnalysis& qt_block, const BlockAnalysis& qx_block);
DistillationModel family_3k8_model(int k);
/// Leading-order toy: output error 35 p^3, acceptance not modeled (= 1).
DistillationModel leading_order_model();

/// Iterates p_m = output_error(p_{m-1}) until target_reached; throws if p0 is
/// at/above the model threshold or 32 levels do not suffice.
std::vector<LevelTrace> iterate_levels(double p0, double target, const DistillationModel& model);

struct FamilyPoint {
  double accept = 0.0;  // single-block: 1 - (3k+8) p
  double output_error = 0.0;  // (1+3k) p^2
};

/// [[3k+8, k, 2]] analytic point; requires (3k+8) p < 1.
FamilyPoint family_3k8(int k, double p);

}  // namespace tricode
