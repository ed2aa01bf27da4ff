#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tricode {

enum class GateKind {
  H, T, Tdg, Tx, Txdg, X, Z, S,
  Cnot, Cz, Ccx, Ccz,
  MeasX, MeasZ,
};

const char* gate_name(GateKind k);
GateKind gate_from_name(const std::string& name);
int gate_arity(GateKind k);
bool is_measurement(GateKind k);

/// qubits[0..arity-1] are operands; for controlled gates controls come first.
/// cbit: measurement result slot. guard: classical bit that must be 1 for the
/// gate to fire (-1 = unconditional).
struct Gate {
  GateKind kind;
  int q0 = -1, q1 = -1, q2 = -1;
  int cbit = -1;
  int guard = -1;
};

struct Circuit {
  int n_qubits = 0;
  int n_cbits = 0;
  std::vector<Gate> gates;

  // The builders grow n_qubits / n_cbits to cover their operands.
  Circuit& add(GateKind k, int q0, int q1 = -1, int q2 = -1);
  Circuit& measure(GateKind k, int q, int cbit);
  Circuit& add_if(GateKind k, int guard, int q0, int q1 = -1, int q2 = -1);

  /// One gate per line: KIND q0 [q1 [q2]] [-> cbit | ?cbit]
  std::string to_text() const;
  static Circuit parse(const std::string& text);
};

/// Dense statevector, qubit 0 = least significant bit of the basis index.
struct DenseState {
  int n_qubits = 0;
  std::vector<std::complex<double>> amp;

  static DenseState basis(int n_qubits, std::uint64_t index);
  double norm() const;
};

struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> a;  // row-major
  std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

/// Full unitary of a measurement-free circuit (n_qubits <= 12).
ComplexMatrix simulate_unitary(const Circuit& c);

struct RunResult {
  DenseState state;
  std::vector<int> cbits;
};

/// Born-rule sampling with std::mt19937_64(seed).
RunResult simulate_with_measurements(const Circuit& c, const DenseState& input, std::uint64_t seed);

struct Branch {
  std::vector<int> cbits;
  double probability = 0.0;
  DenseState state;  // normalized
};

/// Deterministically enumerates every measurement branch with nonzero
/// probability (depth-first, outcome 0 before 1).
std::vector<Branch> enumerate_branches(const Circuit& c, const DenseState& input);

/// True iff states are equal up to global phase (max deviation <= tol after
/// aligning the first non-negligible amplitude).
bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol = 1e-10);
bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-10);

/// CCX on qubits (0,1,2), 2 = target.
ComplexMatrix ccx_unitary();

/// The 15-gate Toffoli decomposition: 6 CNOT + 2 H + 7 T/T-dagger.
Circuit toffoli_decomposition_standard();

/// Hadamard-free variant for the hybrid system: conjugating the target wire
/// by H turns its T gates into T_X and CNOTs onto it into CZ.
Circuit toffoli_decomposition_hybrid();

/// Teleportation gadget consuming an ancillary Toffoli state.
///
/// Qubits 0-2: ancilla, prepared inside the circuit as CCX|+,+,0>.
/// Qubits 3-5: input (control a, control b, target c).
/// Couplings CNOT(0->3), CNOT(1->4), CNOT(5->2); measurements Z(3), Z(4),
/// X(5) into cbits 0,1,2; feedback per measured bit:
///   m1 -> X(0), CNOT(1->2);  m2 -> X(1), CNOT(0->2);  m3 -> Z(2), CZ(0,1).
/// Output CCX|a,b,c> = |a, b, ab xor c> appears on qubits 0-2.
Circuit toffoli_gadget();

/// Exhaustive gadget check: for every basis input |a,b,c> on qubits 3-5 and
/// every measurement branch, qubits 0-2 end in CCX|a,b,c> while the measured
/// qubits sit in their projected basis states; branch probabilities sum to 1.
bool gadget_reproduces_toffoli(double tol = 1e-10);

/// True iff every gate of the hybrid decomposition touching the target
/// (qubit 2) is TX, TX_DAG, or CZ - i.e. no H and no Z-axis T reaches it.
bool hybrid_target_restriction_ok();

}  // namespace tricode
