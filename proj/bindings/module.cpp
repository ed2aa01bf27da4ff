#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricode/circuits.hpp"
#include "tricode/codes.hpp"
#include "tricode/cost.hpp"
#include "tricode/distill.hpp"
#include "tricode/transversality.hpp"

namespace py = pybind11;
using namespace tricode;

namespace {

BinaryMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  return BinaryMatrix::from_strings(rows);
}

std::vector<std::string> rows_of(const BinaryMatrix& m) {
  std::vector<std::string> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i).to_string());
  return out;
}

py::dict verdict_dict(const TransversalityVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["checks_performed"] = v.checks_performed;
  if (v.induced_sign) d["induced_sign"] = v.induced_sign;
  if (!v.detail.empty()) d["detail"] = v.detail;
  if (v.witness) {
    py::dict w;
    auto put = [&](const char* key, const BinaryVector& x) {
      if (x.size()) w[key] = x.to_string();
    };
    put("psi_a", v.witness->psi_a);
    put("psi_b", v.witness->psi_b);
    put("y_a", v.witness->y_a);
    put("y_b", v.witness->y_b);
    put("vector", v.witness->vector);
    w["phase_lhs"] = v.witness->phase_lhs;
    w["phase_rhs"] = v.witness->phase_rhs;
    if (!v.witness->detail.empty()) w["detail"] = v.witness->detail;
    d["witness"] = w;
  }
  return d;
}

py::dict report_dict(const DistillationReport& r) {
  py::dict d;
  d["mode"] = r.mode;
  d["p"] = r.p;
  d["accept_prob"] = r.accept_prob;
  d["output_error_per_block"] = r.output_error_per_block;
  d["combined_output_error"] = r.combined_output_error;
  if (r.mode == "mc") {
    d["accept_std_error"] = r.accept_std_error;
    d["output_error_std"] = r.output_error_std;
    d["combined_output_error_std"] = r.combined_output_error_std;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["rng"] = r.rng;
  }
  return d;
}

py::list trace_list(const std::vector<LevelTrace>& tr) {
  py::list out;
  for (const LevelTrace& lt : tr) {
    py::dict d;
    d["level"] = lt.level;
    d["input_error"] = lt.input_error;
    d["output_error"] = lt.output_error;
    d["accept_prob"] = lt.accept_prob;
    out.append(d);
  }
  return out;
}

py::dict plan_dict(const CostPlan& plan) {
  py::dict d;
  d["protocol"] = plan.protocol;
  d["p0"] = plan.p0;
  d["target"] = plan.target;
  d["levels"] = trace_list(plan.levels);
  d["expected_qubits"] = plan.expected_qubits;
  d["achieved_error"] = plan.achieved_error;
  if (plan.protocol == "family3k8") d["k_schedule"] = plan.k_schedule;
  return d;
}

HybridSystem system_for(const CssCode& q) { return HybridSystem{q, q, mirror(q)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triorthogonal CSS codes, transversal-gate verification, and "
            "Toffoli-state distillation analysis";

  py::class_<CssCode>(m, "CssCode")
      .def_readonly("n", &CssCode::n)
      .def_readonly("k", &CssCode::k)
      .def_property_readonly("x_stab", [](const CssCode& q) { return rows_of(q.x_stab); })
      .def_property_readonly("z_stab", [](const CssCode& q) { return rows_of(q.z_stab); })
      .def_property_readonly("map_a", [](const CssCode& q) { return rows_of(q.map_a); })
      .def("__repr__", [](const CssCode& q) {
        return "CssCode(n=" + std::to_string(q.n) + ", k=" + std::to_string(q.k) + ")";
      });

  m.def("builtin15", [] { return builtin_15_1_3().base; },
        "The [[15,1,3]] triorthogonal code");
  m.def("build_triorthogonal",
        [](const std::vector<std::string>& rows) {
          return build_triorthogonal(matrix_from_rows(rows)).base;
        },
        py::arg("rows"), "CSS code from a triorthogonal generator matrix");
  m.def("build_css",
        [](const std::vector<std::string>& c1_rows, const std::vector<std::string>& c2_rows) {
          return build_css(ClassicalCode::from_generator(matrix_from_rows(c1_rows)),
                           ClassicalCode::from_generator(matrix_from_rows(c2_rows)));
        },
        py::arg("c1_rows"), py::arg("c2_rows"));
  m.def("mirror", &mirror, py::arg("code"));
  m.def("code_distance",
        [](const CssCode& q) { return code_distance(q); }, py::arg("code"));
  m.def("check_triorthogonal",
        [](const std::vector<std::string>& rows) {
          TriReport r = check_triorthogonal(matrix_from_rows(rows));
          py::dict d;
          d["is_triorthogonal"] = r.is_triorthogonal;
          d["pair_violations"] = r.pair_violations;
          d["triple_violations"] = r.triple_violations;
          d["odd_rows"] = r.odd_rows;
          d["even_rows"] = r.even_rows;
          return d;
        },
        py::arg("rows"));

  m.def("check_cnot_condition",
        [](const CssCode& a, const CssCode& b) { return verdict_dict(check_cnot_condition(a, b)); });
  m.def("check_cz_condition",
        [](const CssCode& a, const CssCode& b) { return verdict_dict(check_cz_condition(a, b)); });
  m.def("verify_cnot_coset",
        [](const CssCode& a, const CssCode& b) { return verdict_dict(verify_cnot_coset(a, b)); });
  m.def("verify_cz_phase",
        [](const CssCode& a, const CssCode& b) { return verdict_dict(verify_cz_phase(a, b)); });
  m.def("verify_t",
        [](const CssCode& q) { return verdict_dict(verify_t_transversality(q)); });
  m.def("verify_tx",
        [](const CssCode& mirror_code, const CssCode& source) {
          return verdict_dict(verify_tx_transversality(mirror_code, source));
        },
        py::arg("mirror_code"), py::arg("source"));
  m.def("verify_toffoli",
        [](const CssCode& a, const CssCode& b, const CssCode& c) {
          return verdict_dict(verify_toffoli_transversality(HybridSystem{a, b, c}));
        });

  m.def("exact_distill",
        [](const CssCode& q, double p) { return report_dict(exact_distill(system_for(q), {p})); },
        py::arg("code"), py::arg("p"));
  m.def("monte_carlo",
        [](const CssCode& q, double p, std::uint64_t trials, std::uint64_t seed) {
          return report_dict(monte_carlo(system_for(q), {p}, trials, seed));
        },
        py::arg("code"), py::arg("p"), py::arg("trials") = 100000, py::arg("seed") = 20240815);
  m.def("count_undetectable",
        [](const CssCode& q, std::size_t w) {
          UndetectableCount c = count_undetectable(q, w);
          return py::make_tuple(c.trivial_syndrome, c.logical);
        },
        py::arg("code"), py::arg("weight"),
        "(#trivial-syndrome patterns, #logical patterns) at the given weight");
  m.def("find_threshold",
        [](const CssCode& q) { return find_threshold(analyze_block(q)); }, py::arg("code"));
  m.def("toffoli_threshold", &toffoli_threshold, py::arg("p_eps"));
  m.def("iterate_levels_hybrid",
        [](double p0, double target) {
          return trace_list(iterate_levels(p0, target,
                                           exact_hybrid_model(builtin_t_block(), builtin_x_block())));
        },
        py::arg("p0"), py::arg("target"));
  m.def("iterate_levels_3k8",
        [](double p0, double target, int k) {
          return trace_list(iterate_levels(p0, target, family_3k8_model(k)));
        },
        py::arg("p0"), py::arg("target"), py::arg("k"));

  m.def("cost_direct15", &cost_direct15, py::arg("m"), py::arg("p0"));
  m.def("cost_magic15", &cost_magic15, py::arg("m"), py::arg("p0"));
  m.def("cost_family3k8",
        [](const std::vector<int>& ks, double p0, double target) {
          return plan_dict(cost_family3k8(ks, p0, target));
        },
        py::arg("k_schedule"), py::arg("p0"), py::arg("target"));
  m.def("optimize_k",
        [](double p0, double target) { return plan_dict(optimize_k(p0, target)); },
        py::arg("p0"), py::arg("target"));
  m.def("default_target_grid", &default_target_grid);
  m.def("fig5_csv",
        [](double p0) { return fig5_csv(cost_curves(p0, default_target_grid())); },
        py::arg("p0"));
  m.def("fig6_csv", [](double p0) { return fig6_csv(p0, default_target_grid()); },
        py::arg("p0"));

  m.def("circuit_text", [](const std::string& which) {
    if (which == "fig2") return toffoli_decomposition_standard().to_text();
    if (which == "fig3") return toffoli_decomposition_hybrid().to_text();
    if (which == "gadget") return toffoli_gadget().to_text();
    throw std::invalid_argument("circuit_text: expected fig2|fig3|gadget");
  });
  m.def("circuits_identities_ok", [] {
    ComplexMatrix ccx = ccx_unitary();
    return equal_up_to_global_phase(simulate_unitary(toffoli_decomposition_standard()), ccx) &&
           equal_up_to_global_phase(simulate_unitary(toffoli_decomposition_hybrid()), ccx) &&
           hybrid_target_restriction_ok() && gadget_reproduces_toffoli();
  });

  m.attr("__version__") = "0.1.0";
}
