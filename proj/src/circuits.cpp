#include "tricode/circuits.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tricode {

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;
};

constexpr KindInfo kKinds[] = {
    {GateKind::H, "H", 1},        {GateKind::T, "T", 1},
    {GateKind::Tdg, "T_DAG", 1},  {GateKind::Tx, "TX", 1},
    {GateKind::Txdg, "TX_DAG", 1}, {GateKind::X, "X", 1},
    {GateKind::Z, "Z", 1},        {GateKind::S, "S", 1},
    {GateKind::Cnot, "CNOT", 2},  {GateKind::Cz, "CZ", 2},
    {GateKind::Ccx, "CCX", 3},    {GateKind::Ccz, "CCZ", 3},
    {GateKind::MeasX, "MEAS_X", 1}, {GateKind::MeasZ, "MEAS_Z", 1},
};

using cplx = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Mat2 {
  cplx a00, a01, a10, a11;
};

Mat2 single_qubit_matrix(GateKind k) {
  const cplx t = std::polar(1.0, std::numbers::pi / 4.0);
  const cplx tb = std::conj(t);
  switch (k) {
    case GateKind::H: return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::T: return {1, 0, 0, t};
    case GateKind::Tdg: return {1, 0, 0, tb};
    // TX = H T H, TX_DAG = H T_DAG H
    case GateKind::Tx: return {(1.0 + t) / 2.0, (1.0 - t) / 2.0, (1.0 - t) / 2.0, (1.0 + t) / 2.0};
    case GateKind::Txdg:
      return {(1.0 + tb) / 2.0, (1.0 - tb) / 2.0, (1.0 - tb) / 2.0, (1.0 + tb) / 2.0};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::S: return {1, 0, 0, cplx(0, 1)};
    default: throw std::logic_error("single_qubit_matrix: not a single-qubit unitary");
  }
}

void apply_single(DenseState& s, int q, const Mat2& m) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  const std::uint64_t dim = std::uint64_t(1) << s.n_qubits;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    cplx a0 = s.amp[i], a1 = s.amp[i | bit];
    s.amp[i] = m.a00 * a0 + m.a01 * a1;
    s.amp[i | bit] = m.a10 * a0 + m.a11 * a1;
  }
}

void apply_unitary(DenseState& s, const Gate& g) {
  const std::uint64_t dim = std::uint64_t(1) << s.n_qubits;
  switch (g.kind) {
    case GateKind::Cnot: {
      const std::uint64_t c = std::uint64_t(1) << g.q0, t = std::uint64_t(1) << g.q1;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c) && !(i & t)) std::swap(s.amp[i], s.amp[i | t]);
      return;
    }
    case GateKind::Cz: {
      const std::uint64_t c = std::uint64_t(1) << g.q0, t = std::uint64_t(1) << g.q1;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c) && (i & t)) s.amp[i] = -s.amp[i];
      return;
    }
    case GateKind::Ccx: {
      const std::uint64_t c0 = std::uint64_t(1) << g.q0, c1 = std::uint64_t(1) << g.q1;
      const std::uint64_t t = std::uint64_t(1) << g.q2;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c0) && (i & c1) && !(i & t)) std::swap(s.amp[i], s.amp[i | t]);
      return;
    }
    case GateKind::Ccz: {
      const std::uint64_t c0 = std::uint64_t(1) << g.q0, c1 = std::uint64_t(1) << g.q1;
      const std::uint64_t t = std::uint64_t(1) << g.q2;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c0) && (i & c1) && (i & t)) s.amp[i] = -s.amp[i];
      return;
    }
    default:
      apply_single(s, g.q0, single_qubit_matrix(g.kind));
      return;
  }
}

double outcome_probability(const DenseState& s, int q, int outcome) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  double p = 0.0;
  for (std::uint64_t i = 0; i < s.amp.size(); ++i)
    if (int((i & bit) != 0) == outcome) p += std::norm(s.amp[i]);
  return p;
}

void project_qubit(DenseState& s, int q, int outcome, double prob) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  const double scale = 1.0 / std::sqrt(prob);
  for (std::uint64_t i = 0; i < s.amp.size(); ++i) {
    if (int((i & bit) != 0) == outcome) s.amp[i] *= scale;
    else s.amp[i] = 0.0;
  }
}

}  // namespace

const char* gate_name(GateKind k) {
  for (const auto& ki : kKinds)
    if (ki.kind == k) return ki.name;
  throw std::logic_error("gate_name: unknown kind");
}

GateKind gate_from_name(const std::string& name) {
  for (const auto& ki : kKinds)
    if (name == ki.name) return ki.kind;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

int gate_arity(GateKind k) {
  for (const auto& ki : kKinds)
    if (ki.kind == k) return ki.arity;
  throw std::logic_error("gate_arity: unknown kind");
}

bool is_measurement(GateKind k) { return k == GateKind::MeasX || k == GateKind::MeasZ; }

Circuit& Circuit::add(GateKind k, int q0, int q1, int q2) {
  Gate g{k, q0, q1, q2, -1, -1};
  gates.push_back(g);
  n_qubits = std::max({n_qubits, q0 + 1, q1 + 1, q2 + 1});
  return *this;
}

Circuit& Circuit::measure(GateKind k, int q, int cbit) {
  if (!is_measurement(k)) throw std::invalid_argument("measure: kind is not a measurement");
  Gate g{k, q, -1, -1, cbit, -1};
  gates.push_back(g);
  n_qubits = std::max(n_qubits, q + 1);
  n_cbits = std::max(n_cbits, cbit + 1);
  return *this;
}

Circuit& Circuit::add_if(GateKind k, int guard, int q0, int q1, int q2) {
  Gate g{k, q0, q1, q2, -1, guard};
  gates.push_back(g);
  n_qubits = std::max({n_qubits, q0 + 1, q1 + 1, q2 + 1});
  n_cbits = std::max(n_cbits, guard + 1);
  return *this;
}

std::string Circuit::to_text() const {
  std::ostringstream out;
  for (const Gate& g : gates) {
    out << gate_name(g.kind) << ' ' << g.q0;
    if (gate_arity(g.kind) > 1) out << ' ' << g.q1;
    if (gate_arity(g.kind) > 2) out << ' ' << g.q2;
    if (g.cbit >= 0) out << " -> " << g.cbit;
    if (g.guard >= 0) out << " ?" << g.guard;
    out << '\n';
  }
  return out.str();
}

Circuit Circuit::parse(const std::string& text) {
  Circuit c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind_name;
    if (!(ls >> kind_name)) continue;
    Gate g;
    g.kind = gate_from_name(kind_name);
    int arity = gate_arity(g.kind);
    int* slots[3] = {&g.q0, &g.q1, &g.q2};
    for (int i = 0; i < arity; ++i)
      if (!(ls >> *slots[i]))
        throw std::invalid_argument("circuit text: gate " + kind_name + " needs " +
                                    std::to_string(arity) + " qubit operands");
    std::string tok;
    while (ls >> tok) {
      if (tok == "->") {
        if (!(ls >> g.cbit)) throw std::invalid_argument("circuit text: missing cbit after ->");
      } else if (tok.size() > 1 && tok[0] == '?') {
        g.guard = std::stoi(tok.substr(1));
      } else {
        throw std::invalid_argument("circuit text: unexpected token '" + tok + "'");
      }
    }
    if (is_measurement(g.kind) && g.cbit < 0)
      throw std::invalid_argument("circuit text: measurement without '-> cbit'");
    if (!is_measurement(g.kind) && g.cbit >= 0)
      throw std::invalid_argument("circuit text: '-> cbit' on a non-measurement gate");
    c.gates.push_back(g);
    c.n_qubits = std::max({c.n_qubits, g.q0 + 1, g.q1 + 1, g.q2 + 1});
    c.n_cbits = std::max({c.n_cbits, g.cbit + 1, g.guard + 1});
  }
  return c;
}

DenseState DenseState::basis(int n_qubits, std::uint64_t index) {
  DenseState s;
  s.n_qubits = n_qubits;
  s.amp.assign(std::uint64_t(1) << n_qubits, 0.0);
  s.amp[index] = 1.0;
  return s;
}

double DenseState::norm() const {
  double n = 0.0;
  for (const auto& a : amp) n += std::norm(a);
  return std::sqrt(n);
}

namespace {

void validate_register(const Circuit& c, const char* who) {
  for (const Gate& g : c.gates) {
    int top = std::max({g.q0, g.q1, g.q2});
    if (g.q0 < 0 || top >= c.n_qubits)
      throw std::invalid_argument(std::string(who) + ": gate qubit outside the register");
    if (g.cbit >= c.n_cbits || g.guard >= c.n_cbits)
      throw std::invalid_argument(std::string(who) + ": classical bit outside the register");
  }
}

}  // namespace

ComplexMatrix simulate_unitary(const Circuit& c) {
  if (c.n_qubits > 12) throw std::invalid_argument("simulate_unitary: more than 12 qubits");
  validate_register(c, "simulate_unitary");
  for (const Gate& g : c.gates)
    if (is_measurement(g.kind) || g.guard >= 0)
      throw std::invalid_argument("simulate_unitary: circuit contains measurements or guards");
  const std::uint64_t dim = std::uint64_t(1) << c.n_qubits;
  ComplexMatrix u;
  u.dim = dim;
  u.a.assign(dim * dim, 0.0);
  for (std::uint64_t col = 0; col < dim; ++col) {
    DenseState s = DenseState::basis(c.n_qubits, col);
    for (const Gate& g : c.gates) apply_unitary(s, g);
    for (std::uint64_t row = 0; row < dim; ++row) u.at(row, col) = s.amp[row];
  }
  return u;
}

namespace {

// X-basis measurement = H, Z-measurement, H (leaves the state projected
// onto |+> or |->).
template <typename PickOutcome>
int measure_qubit(DenseState& s, const Gate& g, PickOutcome&& pick) {
  if (g.kind == GateKind::MeasX) apply_single(s, g.q0, single_qubit_matrix(GateKind::H));
  double p0 = outcome_probability(s, g.q0, 0);
  int outcome = pick(p0);
  project_qubit(s, g.q0, outcome, outcome == 0 ? p0 : 1.0 - p0);
  if (g.kind == GateKind::MeasX) apply_single(s, g.q0, single_qubit_matrix(GateKind::H));
  return outcome;
}

}  // namespace

RunResult simulate_with_measurements(const Circuit& c, const DenseState& input,
                                     std::uint64_t seed) {
  if (input.n_qubits != c.n_qubits || input.amp.size() != (std::uint64_t(1) << c.n_qubits))
    throw std::invalid_argument("simulate_with_measurements: input size mismatch");
  validate_register(c, "simulate_with_measurements");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RunResult r{input, std::vector<int>(c.n_cbits, 0)};
  for (const Gate& g : c.gates) {
    if (g.guard >= 0 && !r.cbits[g.guard]) continue;
    if (is_measurement(g.kind)) {
      int m = measure_qubit(r.state, g, [&](double p0) { return unit(rng) < p0 ? 0 : 1; });
      if (g.cbit >= 0) r.cbits[g.cbit] = m;
    } else {
      apply_unitary(r.state, g);
    }
  }
  return r;
}

namespace {

void enumerate_rec(const Circuit& c, std::size_t gate_index, DenseState state,
                   std::vector<int> cbits, double prob, std::vector<Branch>& out) {
  constexpr double kNegligible = 1e-15;
  for (std::size_t i = gate_index; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.guard >= 0 && !cbits[g.guard]) continue;
    if (!is_measurement(g.kind)) {
      apply_unitary(state, g);
      continue;
    }
    // branch
    for (int outcome = 0; outcome <= 1; ++outcome) {
      DenseState sub = state;
      if (g.kind == GateKind::MeasX) apply_single(sub, g.q0, single_qubit_matrix(GateKind::H));
      double p = outcome_probability(sub, g.q0, outcome);
      if (p < kNegligible) continue;
      project_qubit(sub, g.q0, outcome, p);
      if (g.kind == GateKind::MeasX) apply_single(sub, g.q0, single_qubit_matrix(GateKind::H));
      std::vector<int> sub_cbits = cbits;
      if (g.cbit >= 0) sub_cbits[g.cbit] = outcome;
      enumerate_rec(c, i + 1, std::move(sub), std::move(sub_cbits), prob * p, out);
    }
    return;
  }
  out.push_back(Branch{std::move(cbits), prob, std::move(state)});
}

}  // namespace

std::vector<Branch> enumerate_branches(const Circuit& c, const DenseState& input) {
  if (input.n_qubits != c.n_qubits || input.amp.size() != (std::uint64_t(1) << c.n_qubits))
    throw std::invalid_argument("enumerate_branches: input size mismatch");
  validate_register(c, "enumerate_branches");
  std::vector<Branch> out;
  enumerate_rec(c, 0, input, std::vector<int>(c.n_cbits, 0), 1.0, out);
  return out;
}

bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol) {
  if (a.amp.size() != b.amp.size()) return false;
  cplx phase = 1.0;
  bool anchored = false;
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    if (!anchored && std::abs(a.amp[i]) > 1e-12) {
      if (std::abs(b.amp[i]) < 1e-12) return false;
      phase = a.amp[i] / b.amp[i];
      anchored = true;
    }
  }
  if (!anchored) return b.norm() < tol;
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.amp.size(); ++i)
    if (std::abs(a.amp[i] - phase * b.amp[i]) > tol) return false;
  return true;
}

bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.dim != b.dim) return false;
  DenseState sa, sb;
  sa.amp = a.a;
  sb.amp = b.a;
  return equal_up_to_global_phase(sa, sb, tol);
}

ComplexMatrix ccx_unitary() {
  Circuit c;
  c.n_qubits = 3;
  c.add(GateKind::Ccx, 0, 1, 2);
  return simulate_unitary(c);
}

Circuit toffoli_decomposition_standard() {
  Circuit c;
  c.n_qubits = 3;
  c.add(GateKind::H, 2);
  c.add(GateKind::Cnot, 1, 2);
  c.add(GateKind::Tdg, 2);
  c.add(GateKind::Cnot, 0, 2);
  c.add(GateKind::T, 2);
  c.add(GateKind::Cnot, 1, 2);
  c.add(GateKind::Tdg, 2);
  c.add(GateKind::Cnot, 0, 2);
  c.add(GateKind::T, 1);
  c.add(GateKind::T, 2);
  c.add(GateKind::H, 2);
  c.add(GateKind::Cnot, 0, 1);
  c.add(GateKind::T, 0);
  c.add(GateKind::Tdg, 1);
  c.add(GateKind::Cnot, 0, 1);
  return c;
}

Circuit toffoli_decomposition_hybrid() {
  // The standard decomposition with the target wire conjugated by H: its two
  // Hadamards cancel, T/T_DAG on the target become TX/TX_DAG, CNOTs onto the
  // target become CZ. Control-side gates are untouched.
  Circuit c;
  c.n_qubits = 3;
  c.add(GateKind::Cz, 1, 2);
  c.add(GateKind::Txdg, 2);
  c.add(GateKind::Cz, 0, 2);
  c.add(GateKind::Tx, 2);
  c.add(GateKind::Cz, 1, 2);
  c.add(GateKind::Txdg, 2);
  c.add(GateKind::Cz, 0, 2);
  c.add(GateKind::T, 1);
  c.add(GateKind::Tx, 2);
  c.add(GateKind::Cnot, 0, 1);
  c.add(GateKind::T, 0);
  c.add(GateKind::Tdg, 1);
  c.add(GateKind::Cnot, 0, 1);
  return c;
}

Circuit toffoli_gadget() {
  // See the header for the derivation. Feedback order matters: the m1 block
  // precedes the m2 block, and the m3 block comes last.
  Circuit c;
  c.n_qubits = 6;
  c.n_cbits = 3;
  c.add(GateKind::H, 0);
  c.add(GateKind::H, 1);
  c.add(GateKind::Ccx, 0, 1, 2);
  c.add(GateKind::Cnot, 0, 3);
  c.add(GateKind::Cnot, 1, 4);
  c.add(GateKind::Cnot, 5, 2);
  c.measure(GateKind::MeasZ, 3, 0);
  c.measure(GateKind::MeasZ, 4, 1);
  c.measure(GateKind::MeasX, 5, 2);
  c.add_if(GateKind::X, 0, 0);
  c.add_if(GateKind::Cnot, 0, 1, 2);
  c.add_if(GateKind::X, 1, 1);
  c.add_if(GateKind::Cnot, 1, 0, 2);
  c.add_if(GateKind::Z, 2, 2);
  c.add_if(GateKind::Cz, 2, 0, 1);
  return c;
}

bool gadget_reproduces_toffoli(double tol) {
  Circuit g = toffoli_gadget();
  const double r = 1.0 / std::sqrt(2.0);
  for (std::uint64_t in = 0; in < 8; ++in) {
    int a = in & 1, b = (in >> 1) & 1, c = (in >> 2) & 1;
    std::uint64_t start = (std::uint64_t(a) << 3) | (std::uint64_t(b) << 4) |
                          (std::uint64_t(c) << 5);
    auto branches = enumerate_branches(g, DenseState::basis(6, start));
    if (branches.size() != 8) return false;
    double total = 0.0;
    for (const Branch& br : branches) {
      total += br.probability;
      int m1 = br.cbits[0], m2 = br.cbits[1], m3 = br.cbits[2];
      // qubits 0-2: CCX|a,b,c>; 3,4: collapsed to m1,m2; 5: |+> or |->
      DenseState want;
      want.n_qubits = 6;
      want.amp.assign(64, 0.0);
      std::uint64_t base = std::uint64_t(a) | (std::uint64_t(b) << 1) |
                           (std::uint64_t(c ^ (a & b)) << 2) |
                           (std::uint64_t(m1) << 3) | (std::uint64_t(m2) << 4);
      want.amp[base] = r;
      want.amp[base | (std::uint64_t(1) << 5)] = m3 ? -r : r;
      if (!equal_up_to_global_phase(br.state, want, tol)) return false;
    }
    if (std::fabs(total - 1.0) > tol) return false;
  }
  return true;
}

bool hybrid_target_restriction_ok() {
  for (const Gate& g : toffoli_decomposition_hybrid().gates) {
    if (g.q0 != 2 && g.q1 != 2 && g.q2 != 2) continue;
    if (g.kind != GateKind::Tx && g.kind != GateKind::Txdg && g.kind != GateKind::Cz)
      return false;
  }
  return true;
}

}  // namespace tricode
