#include "tricode/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tricode {

const char* const kFamilyCostModelNote =
    "family3k8 cost model: three [[3k+8,k,2]] blocks per round produce k states; "
    "Q_m = 3(3k_m+8)/k_m * Q_{m-1} / accept^3 with accept = 1-(3k+8)p per block";
const char* const kRetryModelNote =
    "retries are independent resampling: expected cost divides by the overall "
    "success probability";

const BlockAnalysis& builtin_t_block() {
  static const BlockAnalysis b = analyze_block(builtin_15_1_3().base);
  return b;
}

const BlockAnalysis& builtin_x_block() {
  static const BlockAnalysis b = analyze_block(mirror(builtin_15_1_3().base));
  return b;
}

double builtin_threshold() {
  static const double t = find_threshold(builtin_t_block());
  return t;
}

std::vector<LevelTrace> hybrid_levels(double p0, int m) {
  if (m < 0) throw std::invalid_argument("hybrid_levels: negative level count");
  if (p0 < 0.0 || p0 >= builtin_threshold())
    throw std::domain_error("hybrid_levels: p0 must lie in [0, threshold)");
  std::vector<LevelTrace> trace;
  double p = p0;
  for (int ell = 1; ell <= m; ++ell) {
    LevelTrace lt;
    lt.level = ell;
    lt.input_error = p;
    double at = exact_accept_prob(builtin_t_block(), p);
    lt.accept_prob = at * at * exact_accept_prob(builtin_x_block(), p);
    p = exact_output_error(builtin_t_block(), p);
    lt.output_error = p;
    trace.push_back(lt);
  }
  return trace;
}

namespace {

double success_product(const std::vector<LevelTrace>& levels) {
  double s = 1.0;
  for (const LevelTrace& lt : levels) s *= lt.accept_prob;
  return s;
}

double pow15(int m) { return std::pow(15.0, double(m)); }

}  // namespace

double cost_direct15(int m, double p0) {
  if (m < 1) throw std::invalid_argument("cost_direct15: m must be >= 1");
  double numerator = 3.0 * pow15(m) + 45.0 * (m - 1);
  return numerator / success_product(hybrid_levels(p0, m));
}

double cost_magic15(int m, double p0) {
  if (m < 1) throw std::invalid_argument("cost_magic15: m must be >= 1");
  return 7.0 * pow15(m) / success_product(hybrid_levels(p0, m));
}

CostPlan cost_family3k8(const std::vector<int>& k_schedule, double p0, double target) {
  if (!(p0 > 0.0) || !(target > 0.0))
    throw std::invalid_argument("cost_family3k8: p0 and target must be positive");
  CostPlan plan;
  plan.protocol = "family3k8";
  plan.p0 = p0;
  plan.target = target;
  plan.k_schedule = k_schedule;
  double p = p0, q = 1.0;
  for (std::size_t i = 0; i < k_schedule.size(); ++i) {
    int k = k_schedule[i];
    if (k < 1 || k > 50)
      throw std::invalid_argument("cost_family3k8: k out of [1,50] at level " +
                                  std::to_string(i + 1));
    if (!((3.0 * k + 8.0) * p < 1.0))
      throw std::domain_error("cost_family3k8: validity window (3k+8)p < 1 violated at level " +
                              std::to_string(i + 1));
    FamilyPoint fp = family_3k8(k, p);
    LevelTrace lt;
    lt.level = int(i) + 1;
    lt.input_error = p;
    lt.output_error = fp.output_error;
    lt.accept_prob = fp.accept * fp.accept * fp.accept;
    plan.levels.push_back(lt);
    q *= 3.0 * (3.0 * k + 8.0) / double(k) / lt.accept_prob;
    p = fp.output_error;
  }
  plan.expected_qubits = q;
  plan.achieved_error = p;
  if (!target_reached(p, target))
    throw std::runtime_error("cost_family3k8: schedule does not reach the target");
  return plan;
}

namespace {

struct SearchState {
  double p = 0.0;
  double q = 1.0;
  std::vector<int> schedule;
};

/// Keeps only Pareto-optimal (p, q) pairs. Any dominated state stays dominated
/// under every continuation: the error map is increasing in p and the cost
/// factor 1/accept^3 is too, so pruning cannot lose the optimum.
std::vector<SearchState> prune(std::vector<SearchState> states) {
  std::sort(states.begin(), states.end(), [](const SearchState& a, const SearchState& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    return a.schedule < b.schedule;
  });
  std::vector<SearchState> kept;
  double best_q = std::numeric_limits<double>::infinity();
  for (SearchState& s : states) {
    if (s.q >= best_q) continue;  // some state with p' <= p already has q' <= q
    best_q = s.q;
    kept.push_back(std::move(s));
  }
  return kept;
}

bool plan_better(const CostPlan& a, const CostPlan& b) {
  if (a.expected_qubits != b.expected_qubits) return a.expected_qubits < b.expected_qubits;
  if (a.k_schedule.size() != b.k_schedule.size())
    return a.k_schedule.size() < b.k_schedule.size();
  return a.k_schedule < b.k_schedule;
}

}  // namespace

CostPlan optimize_k(double p0, double target) {
  if (!(p0 > 0.0) || !(target > 0.0))
    throw std::invalid_argument("optimize_k: p0 and target must be positive");
  constexpr int kMaxLevels = 6, kMaxK = 50;

  CostPlan best;
  bool found = false;
  auto consider = [&](const SearchState& s) {
    if (!target_reached(s.p, target)) return;
    CostPlan plan;
    plan.protocol = "family3k8";
    plan.p0 = p0;
    plan.target = target;
    plan.k_schedule = s.schedule;
    plan.expected_qubits = s.q;
    plan.achieved_error = s.p;
    if (!found || plan_better(plan, best)) {
      best = std::move(plan);
      found = true;
    }
  };

  std::vector<SearchState> frontier{SearchState{p0, 1.0, {}}};
  consider(frontier[0]);
  for (int level = 1; level <= kMaxLevels; ++level) {
    std::vector<SearchState> next;
    for (const SearchState& s : frontier) {
      for (int k = 1; k <= kMaxK; ++k) {
        if (!((3.0 * k + 8.0) * s.p < 1.0)) continue;
        FamilyPoint fp = family_3k8(k, s.p);
        if (fp.output_error >= s.p) continue;  // non-improving level is never optimal
        SearchState t;
        t.p = fp.output_error;
        t.q = s.q * 3.0 * (3.0 * k + 8.0) / double(k) /
              (fp.accept * fp.accept * fp.accept);
        t.schedule = s.schedule;
        t.schedule.push_back(k);
        consider(t);
        next.push_back(std::move(t));
      }
    }
    frontier = prune(std::move(next));
    if (frontier.empty()) break;
  }
  if (!found) throw std::runtime_error("optimize_k: target unreachable within 6 levels");

  // Rebuild through cost_family3k8 so the returned plan carries level traces
  // computed by the same code path callers would use to re-check it.
  return cost_family3k8(best.k_schedule, p0, target);
}

std::vector<FixedKPoint> fixed_k_costs(double p0, double target, int max_levels) {
  std::vector<FixedKPoint> out;
  for (int k = 1; k <= 50; ++k) {
    double p = p0, q = 1.0;
    bool ok = false;
    int m = 0;
    while (m < max_levels) {
      if (target_reached(p, target)) { ok = true; break; }
      if (!((3.0 * k + 8.0) * p < 1.0)) break;
      FamilyPoint fp = family_3k8(k, p);
      if (fp.output_error >= p) break;
      q *= 3.0 * (3.0 * k + 8.0) / double(k) /
           (fp.accept * fp.accept * fp.accept);
      p = fp.output_error;
      ++m;
    }
    if (!ok && target_reached(p, target)) ok = true;
    if (!ok) continue;
    out.push_back(FixedKPoint{k, m, q});
  }
  return out;
}

std::vector<double> default_target_grid() {
  std::vector<double> grid;
  for (int e = 3; e <= 14; ++e) grid.push_back(std::pow(10.0, -e));
  return grid;
}

CostCurve cost_curves(double p0, const std::vector<double>& targets) {
  for (std::size_t i = 1; i < targets.size(); ++i)
    if (!(targets[i] < targets[i - 1]))
      throw std::invalid_argument("cost_curves: target grid must be strictly decreasing");
  CostCurve curve;
  curve.p0 = p0;
  curve.targets = targets;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (double target : targets) {
    // Smallest m whose iterated error reaches the target; m = 0 means the
    // input state is already good enough (cost: the single state).
    int m = -1;
    if (p0 < builtin_threshold()) {
      double p = p0;
      for (int i = 0; i <= 32; ++i) {
        if (target_reached(p, target)) { m = i; break; }
        p = exact_output_error(builtin_t_block(), p);
      }
    }
    if (m < 0) {
      curve.direct15_qubits.push_back(nan);
      curve.direct15_levels.push_back(-1);
      curve.magic15_qubits.push_back(nan);
      curve.magic15_levels.push_back(-1);
    } else if (m == 0) {
      curve.direct15_qubits.push_back(1.0);
      curve.direct15_levels.push_back(0);
      curve.magic15_qubits.push_back(1.0);
      curve.magic15_levels.push_back(0);
    } else {
      curve.direct15_qubits.push_back(cost_direct15(m, p0));
      curve.direct15_levels.push_back(m);
      curve.magic15_qubits.push_back(cost_magic15(m, p0));
      curve.magic15_levels.push_back(m);
    }

    try {
      CostPlan plan = optimize_k(p0, target);
      curve.family3k8_qubits.push_back(plan.expected_qubits);
      curve.family3k8_schedules.push_back(plan.k_schedule);
    } catch (const std::exception&) {
      curve.family3k8_qubits.push_back(nan);
      curve.family3k8_schedules.push_back({});
    }
  }
  return curve;
}

namespace {

std::string join_schedule(const std::vector<int>& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(ks[i]);
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string fig5_csv(const CostCurve& curve) {
  std::ostringstream os;
  os << "target_error,protocol,expected_qubits,levels,k_schedule\n";
  for (std::size_t i = 0; i < curve.targets.size(); ++i) {
    os << fmt(curve.targets[i]) << ",direct15," << fmt(curve.direct15_qubits[i]) << ","
       << curve.direct15_levels[i] << ",\n";
    os << fmt(curve.targets[i]) << ",magic15," << fmt(curve.magic15_qubits[i]) << ","
       << curve.magic15_levels[i] << ",\n";
    os << fmt(curve.targets[i]) << ",family3k8," << fmt(curve.family3k8_qubits[i]) << ","
       << curve.family3k8_schedules[i].size() << ","
       << join_schedule(curve.family3k8_schedules[i]) << "\n";
  }
  return os.str();
}

std::string fig6_csv(double p0, const std::vector<double>& targets) {
  std::ostringstream os;
  os << "target_error,k,expected_qubits\n";
  for (double target : targets)
    for (const FixedKPoint& pt : fixed_k_costs(p0, target))
      os << fmt(target) << "," << pt.k << "," << fmt(pt.expected_qubits) << "\n";
  return os.str();
}

}  // namespace tricode
