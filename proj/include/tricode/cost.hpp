#pragma once

#include <string>
#include <vector>

#include "tricode/distill.hpp"

namespace tricode {

/// A multi-level distillation schedule with its expected qubit price.
struct CostPlan {
  std::string protocol;  // "direct15" | "magic15" | "family3k8"
  double p0 = 0.0;
  double target = 0.0;
  std::vector<LevelTrace> levels;
  std::vector<int> k_schedule;  // family3k8 only
  double expected_qubits = 0.0;
  double achieved_error = 0.0;  // <= kTargetSlack * target when a target is set
};

/// Expected qubit counts per target for the three protocols. Entries are NaN
/// where a protocol cannot reach the target (per-point marker, not a failure).
struct CostCurve {
  double p0 = 0.0;
  std::vector<double> targets;  // strictly decreasing
  std::vector<double> direct15_qubits;
  std::vector<int> direct15_levels;
  std::vector<double> magic15_qubits;
  std::vector<int> magic15_levels;
  std::vector<double> family3k8_qubits;
  std::vector<std::vector<int>> family3k8_schedules;
};

/// Cached exact analysis of the builtin 15-qubit protocol blocks.
const BlockAnalysis& builtin_t_block();
const BlockAnalysis& builtin_x_block();
/// find_threshold of the builtin T-type block (computed once).
double builtin_threshold();

/// Recursion levels for the 15-qubit protocol: exactly m rounds starting at
/// p0, each round's error map and acceptance taken from the exact block
/// polynomials (two T-type blocks, one X-type block per round).
std::vector<LevelTrace> hybrid_levels(double p0, int m);

/// (3*15^m + 45(m-1)) / p_suc with p_suc = product of round acceptances.
double cost_direct15(int m, double p0);
/// 7*15^m / p_suc with the same p_suc treatment, so the magic/direct ratio
/// reduces to the numerator ratio.
double cost_magic15(int m, double p0);

/// Expected qubits per output state for a [[3k+8,k,2]] cascade:
/// Q_m = 3 (3 k_m + 8) / k_m * Q_{m-1} / accept(level m)^3, Q_0 = 1.
CostPlan cost_family3k8(const std::vector<int>& k_schedule, double p0, double target);

/// Exhaustive search (levels <= 6, k in 1..50) minimizing expected_qubits
/// subject to reaching the target; ties broken by fewer levels, then by
/// lexicographically smaller schedule.
CostPlan optimize_k(double p0, double target);

struct FixedKPoint {
  int k = 0;
  int levels = 0;
  double expected_qubits = 0.0;
};

/// Cost of the constant-k schedule reaching the target, per k (unreachable
/// k's are omitted).
std::vector<FixedKPoint> fixed_k_costs(double p0, double target, int max_levels = 6);

/// Logarithmic grid 1e-3 .. 1e-14, 12 points, strictly decreasing.
std::vector<double> default_target_grid();

CostCurve cost_curves(double p0, const std::vector<double>& targets);

/// CSV: target_error,protocol,expected_qubits,levels,k_schedule
/// (k_schedule entries joined with ';'; NaN printed for unreachable points).
std::string fig5_csv(const CostCurve& curve);
/// CSV: target_error,k,expected_qubits - constant-k family costs per target.
std::string fig6_csv(double p0, const std::vector<double>& targets);

/// Modeling choices recorded alongside machine-readable output.
extern const char* const kFamilyCostModelNote;
extern const char* const kRetryModelNote;

}  // namespace tricode
