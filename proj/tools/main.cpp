#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricode/circuits.hpp"
#include "tricode/codes.hpp"
#include "tricode/cost.hpp"
#include "tricode/distill.hpp"
#include "tricode/transversality.hpp"

using nlohmann::json;
using namespace tricode;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Code operand: a matrix file of triorthogonal generator rows, or the token
/// `builtin15`; a `:mirror` suffix swaps the X/Z sides of the loaded code.
CssCode load_code(std::string token) {
  bool mirrored = false;
  const std::string suffix = ":mirror";
  if (token.size() > suffix.size() &&
      token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
    mirrored = true;
    token.resize(token.size() - suffix.size());
  }
  CssCode q = token == "builtin15"
                  ? builtin_15_1_3().base
                  : build_triorthogonal(BinaryMatrix::parse(read_file(token))).base;
  return mirrored ? mirror(q) : q;
}

json bits_list(const BinaryMatrix& m) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(m.row(i).to_string());
  return arr;
}

json code_json(const CssCode& q, bool with_distance) {
  json j{{"n", q.n},
         {"k", q.k},
         {"x_stab", bits_list(q.x_stab)},
         {"z_stab", bits_list(q.z_stab)},
         {"map_a", bits_list(q.map_a)}};
  if (with_distance) j["distance"] = code_distance(q);
  return j;
}

json witness_json(const TransversalWitness& w) {
  json j;
  auto put = [&](const char* key, const BinaryVector& v) {
    if (v.size()) j[key] = v.to_string();
  };
  put("psi_a", w.psi_a);
  put("psi_b", w.psi_b);
  put("y_a", w.y_a);
  put("y_b", w.y_b);
  put("vector", w.vector);
  j["phase_lhs"] = w.phase_lhs;
  j["phase_rhs"] = w.phase_rhs;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

json verdict_json(const std::string& gate, const TransversalityVerdict& v) {
  json j{{"gate", gate}, {"holds", v.holds}, {"checks_performed", v.checks_performed}};
  if (v.induced_sign) j["induced_sign"] = v.induced_sign;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

json trace_json(const std::vector<LevelTrace>& tr) {
  json arr = json::array();
  for (const LevelTrace& lt : tr)
    arr.push_back(json{{"level", lt.level},
                       {"input_error", lt.input_error},
                       {"output_error", lt.output_error},
                       {"accept_prob", lt.accept_prob}});
  return arr;
}

json plan_json(const CostPlan& plan) {
  json j{{"protocol", plan.protocol},
         {"p0", plan.p0},
         {"target", plan.target},
         {"levels", trace_json(plan.levels)},
         {"expected_qubits", plan.expected_qubits},
         {"achieved_error", plan.achieved_error}};
  if (plan.protocol == "family3k8") {
    j["k_schedule"] = plan.k_schedule;
    j["model_notes"] = json::array({kFamilyCostModelNote, kRetryModelNote});
  }
  return j;
}

json report_json(const DistillationReport& r) {
  json j{{"mode", r.mode},
         {"p", r.p},
         {"accept_prob", r.accept_prob},
         {"output_error_per_block", r.output_error_per_block},
         {"combined_output_error", r.combined_output_error}};
  if (r.mode == "mc") {
    j["accept_std_error"] = r.accept_std_error;
    j["output_error_std"] = r.output_error_std;
    j["combined_output_error_std"] = r.combined_output_error_std;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["rng"] = r.rng;
  }
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int parse_3k8(const std::string& token) {
  int k = std::stoi(token.substr(4));
  if (k < 1 || k > 50) throw std::runtime_error("3k8 k must be in [1,50]");
  return k;
}

bool is_3k8(const std::string& token) { return token.rfind("3k8:", 0) == 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tricode: triorthogonal code construction, transversal-gate verification, "
      "Toffoli-state distillation analysis"};
  app.require_subcommand(1);

  // build-css
  auto* build_cmd = app.add_subcommand("build-css", "Build a CSS code from C1/C2 generators");
  std::string c1_path, c2_path;
  bool build_distance = false;
  build_cmd->add_option("--c1", c1_path, "generator matrix file for C1")->required();
  build_cmd->add_option("--c2", c2_path, "generator matrix file for C2")->required();
  build_cmd->add_flag("--distance", build_distance, "also compute the code distance");
  build_cmd->callback([&] {
    auto c1 = ClassicalCode::from_generator(BinaryMatrix::parse(read_file(c1_path)));
    auto c2 = ClassicalCode::from_generator(BinaryMatrix::parse(read_file(c2_path)));
    print(code_json(build_css(c1, c2), build_distance));
  });

  // check-tri
  auto* tri_cmd = app.add_subcommand("check-tri", "Check triorthogonality of a generator matrix");
  std::string tri_path;
  bool tri_distance = false;
  tri_cmd->add_option("matrix", tri_path, "generator matrix file")->required();
  tri_cmd->add_flag("--distance", tri_distance, "also compute the code distance");
  tri_cmd->callback([&] {
    BinaryMatrix g = BinaryMatrix::parse(read_file(tri_path));
    TriReport rep = check_triorthogonal(g);
    json j{{"is_triorthogonal", rep.is_triorthogonal},
           {"pair_violations", rep.pair_violations},
           {"triple_violations", rep.triple_violations},
           {"odd_rows", rep.odd_rows},
           {"even_rows", rep.even_rows}};
    if (rep.is_triorthogonal && !rep.odd_rows.empty())
      j["code"] = code_json(build_triorthogonal(g).base, tri_distance);
    print(j);
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Verify a transversality claim");
  std::string gate;
  std::vector<std::string> operands;
  verify_cmd->add_option("--gate", gate, "cnot|cz|t|tx|toffoli")
      ->required()
      ->check(CLI::IsMember({"cnot", "cz", "t", "tx", "toffoli"}));
  verify_cmd->add_option("codes", operands,
                         "code operands: matrix file or builtin15, optional :mirror suffix");
  verify_cmd->callback([&] {
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (operands.size() < lo || operands.size() > hi)
        throw std::runtime_error("verify --gate " + gate + ": wrong number of code operands");
    };
    if (gate == "t") {
      need(1, 1);
      print(verdict_json(gate, verify_t_transversality(load_code(operands[0]))));
    } else if (gate == "tx") {
      need(1, 2);
      CssCode source = load_code(operands.size() == 2 ? operands[1] : operands[0]);
      CssCode mirror_code = operands.size() == 2 ? load_code(operands[0]) : mirror(source);
      print(verdict_json(gate, verify_tx_transversality(mirror_code, source)));
    } else if (gate == "cnot" || gate == "cz") {
      need(2, 2);
      CssCode qa = load_code(operands[0]), qb = load_code(operands[1]);
      TransversalityVerdict cond =
          gate == "cnot" ? check_cnot_condition(qa, qb) : check_cz_condition(qa, qb);
      TransversalityVerdict coset =
          gate == "cnot" ? verify_cnot_coset(qa, qb) : verify_cz_phase(qa, qb);
      if (cond.holds != coset.holds)
        throw std::runtime_error("verify: condition check and coset verification disagree");
      json j = verdict_json(gate, coset);
      j["condition_holds"] = cond.holds;
      print(j);
    } else {  // toffoli
      need(3, 3);
      HybridSystem sys{load_code(operands[0]), load_code(operands[1]), load_code(operands[2])};
      print(verdict_json(gate, verify_toffoli_transversality(sys)));
    }
  });

  // circuit
  auto* circuit_cmd = app.add_subcommand("circuit", "Emit or check the named circuits");
  std::string which;
  bool emit = false, check = false;
  circuit_cmd->add_option("--which", which, "fig2|fig3|gadget")
      ->check(CLI::IsMember({"fig2", "fig3", "gadget"}));
  circuit_cmd->add_flag("--emit", emit, "print the circuit text");
  circuit_cmd->add_flag("--check", check, "run the identity suite");
  circuit_cmd->callback([&] {
    if (emit == check)
      throw std::runtime_error("circuit: pass exactly one of --emit / --check");
    auto make = [](const std::string& name) {
      if (name == "fig2") return toffoli_decomposition_standard();
      if (name == "fig3") return toffoli_decomposition_hybrid();
      return toffoli_gadget();
    };
    if (emit) {
      if (which.empty()) throw std::runtime_error("circuit --emit requires --which");
      std::cout << make(which).to_text();
      return;
    }
    json j;
    ComplexMatrix ccx = ccx_unitary();
    if (which.empty() || which == "fig2")
      j["fig2_equals_ccx"] =
          equal_up_to_global_phase(simulate_unitary(toffoli_decomposition_standard()), ccx);
    if (which.empty() || which == "fig3") {
      j["fig3_equals_ccx"] =
          equal_up_to_global_phase(simulate_unitary(toffoli_decomposition_hybrid()), ccx);
      j["fig3_target_restriction"] = hybrid_target_restriction_ok();
    }
    if (which.empty() || which == "gadget") j["gadget_all_inputs_ok"] = gadget_reproduces_toffoli();
    bool all = true;
    for (const auto& kv : j.items())
      all = all && kv.value().is_boolean() && kv.value().get<bool>();
    j["all_ok"] = all;
    print(j);
    if (!all) throw std::runtime_error("circuit --check failed");
  });

  // distill
  auto* distill_cmd = app.add_subcommand("distill", "Exact or Monte Carlo distillation report");
  std::string mode = "exact", distill_code = "builtin15";
  double distill_p = 0.0;
  std::uint64_t trials = 1000000, seed = 20240815;
  distill_cmd->add_option("--mode", mode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
  distill_cmd->add_option("--code", distill_code, "builtin15 or generator matrix file");
  distill_cmd->add_option("--p", distill_p, "physical Z-error rate")->required();
  distill_cmd->add_option("--trials", trials, "Monte Carlo trials");
  distill_cmd->add_option("--seed", seed, "Monte Carlo seed");
  distill_cmd->callback([&] {
    CssCode q = load_code(distill_code);
    HybridSystem sys{q, q, mirror(q)};
    ErrorModel em{distill_p};
    print(report_json(mode == "exact" ? exact_distill(sys, em)
                                      : monte_carlo(sys, em, trials, seed)));
  });

  // threshold
  auto* thr_cmd = app.add_subcommand("threshold", "Distillation threshold of a code");
  std::string thr_code = "builtin15";
  thr_cmd->add_option("--code", thr_code, "builtin15, matrix file, or 3k8:K");
  thr_cmd->callback([&] {
    double p_star = is_3k8(thr_code) ? family_3k8_model(parse_3k8(thr_code)).threshold
                                     : find_threshold(analyze_block(load_code(thr_code)));
    print(json{{"p_star", p_star}, {"toffoli_threshold", toffoli_threshold(p_star)}});
  });

  // levels
  auto* levels_cmd = app.add_subcommand("levels", "Iterate distillation levels to a target");
  double p0 = 0.0, target = 0.0;
  std::string levels_code = "builtin15";
  levels_cmd->add_option("--p0", p0, "initial error rate")->required();
  levels_cmd->add_option("--target", target, "target error rate")->required();
  levels_cmd->add_option("--code", levels_code, "builtin15 or 3k8:K");
  levels_cmd->callback([&] {
    DistillationModel model =
        is_3k8(levels_code)
            ? family_3k8_model(parse_3k8(levels_code))
            : exact_hybrid_model(builtin_t_block(), builtin_x_block());
    print(trace_json(iterate_levels(p0, target, model)));
  });

  // cost
  auto* cost_cmd = app.add_subcommand("cost", "Expected qubit cost of the distillation routes");
  double cost_p0 = 0.0, cost_target = 0.0;
  std::string protocol = "all";
  bool grid = false;
  cost_cmd->add_option("--p0", cost_p0, "initial error rate")->required();
  cost_cmd->add_option("--protocol", protocol, "direct15|magic15|3k8|all")
      ->check(CLI::IsMember({"direct15", "magic15", "3k8", "all"}));
  auto* target_opt = cost_cmd->add_option("--target", cost_target, "target error rate");
  auto* grid_opt = cost_cmd->add_flag("--grid", grid, "emit CSV over the default target grid");
  target_opt->excludes(grid_opt);
  cost_cmd->callback([&] {
    if (grid) {
      CostCurve curve = cost_curves(cost_p0, default_target_grid());
      std::istringstream rows(fig5_csv(curve));
      std::string line;
      std::getline(rows, line);
      std::cout << line << "\n";
      while (std::getline(rows, line))
        if (protocol == "all" || line.find("," + protocol + ",") != std::string::npos)
          std::cout << line << "\n";
      return;
    }
    if (!(cost_target > 0.0))
      throw std::runtime_error("cost: pass --target F or --grid");
    CostCurve curve = cost_curves(cost_p0, {cost_target});
    auto point_plan = [&](const std::string& proto) {
      if (proto == "3k8" || proto == "family3k8") return plan_json(optimize_k(cost_p0, cost_target));
      int m = proto == "direct15" ? curve.direct15_levels[0] : curve.magic15_levels[0];
      if (m < 0) throw std::runtime_error("cost: target unreachable for " + proto);
      CostPlan plan;
      plan.protocol = proto;
      plan.p0 = cost_p0;
      plan.target = cost_target;
      plan.levels = hybrid_levels(cost_p0, m);
      plan.expected_qubits =
          proto == "direct15" ? curve.direct15_qubits[0] : curve.magic15_qubits[0];
      plan.achieved_error = plan.levels.empty() ? cost_p0 : plan.levels.back().output_error;
      return plan_json(plan);
    };
    if (protocol == "all")
      print(json::array({point_plan("direct15"), point_plan("magic15"), point_plan("3k8")}));
    else
      print(point_plan(protocol));
  });

  // plot-data
  auto* plot_cmd = app.add_subcommand("plot-data", "Write fig5.csv and fig6.csv");
  double plot_p0 = 1e-2;
  std::string out_dir = ".";
  plot_cmd->add_option("--p0", plot_p0, "initial error rate (default 1e-2)");
  plot_cmd->add_option("--out-dir", out_dir, "output directory");
  plot_cmd->callback([&] {
    std::vector<double> targets = default_target_grid();
    std::string fig5_path = out_dir + "/fig5.csv", fig6_path = out_dir + "/fig6.csv";
    std::ofstream f5(fig5_path), f6(fig6_path);
    if (!f5 || !f6) throw std::runtime_error("plot-data: cannot open output files");
    f5 << fig5_csv(cost_curves(plot_p0, targets));
    f6 << fig6_csv(plot_p0, targets);
    print(json{{"fig5", fig5_path}, {"fig6", fig6_path}, {"p0", plot_p0}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
