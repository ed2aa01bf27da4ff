#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tricode/codes.hpp"

namespace tricode {

/// Three code blocks acting as (control, control, target) of a Toffoli.
struct HybridSystem {
  CssCode block1, block2, block3;
};

/// Data reproducing a violation independently of the search that found it.
struct TransversalWitness {
  BinaryVector psi_a, psi_b;   // logical labels (psi_b may be empty)
  BinaryVector y_a, y_b;       // coset elements chosen (may be empty)
  BinaryVector vector;         // offending physical vector, if any
  int phase_lhs = 0, phase_rhs = 0;  // mismatched phases/weights where relevant
  std::string detail;
};

struct TransversalityVerdict {
  bool holds = false;
  int induced_sign = 0;  // +1 logical T, -1 logical T-dagger; 0 when not applicable
  std::uint64_t checks_performed = 0;
  std::optional<TransversalWitness> witness;
  std::string detail;
};

/// Algebraic condition for transversal CNOT with qa as control, qb target:
/// qa's X-stabilizer space inside qb's, and map rows congruent row-by-row
/// modulo qb's X-stabilizer space (canonical row-i alignment).
TransversalityVerdict check_cnot_condition(const CssCode& qa, const CssCode& qb);

/// Algebraic condition for transversal CZ: rows(qa.map) in C4, C3 in C2a,
/// and map_a . map_b^T = I.
TransversalityVerdict check_cz_condition(const CssCode& qa, const CssCode& qb);

/// Ground truth by enumeration: basis kets of the control/target coset
/// expansions map to the correct target coset for every (psi_a, psi_b, y_a).
TransversalityVerdict verify_cnot_coset(const CssCode& qa, const CssCode& qb,
                                        std::size_t limit = kDefaultEnumerationLimit);

/// Ground truth by enumeration: u.v constant and equal to psi_a.psi_b over
/// every pair of coset elements.
TransversalityVerdict verify_cz_phase(const CssCode& qa, const CssCode& qb,
                                      std::size_t limit = kDefaultEnumerationLimit);

/// Transversal T: coset weights constant mod 8 and the induced logical phase
/// pattern equals +|psi| or -|psi| mod 8 uniformly. Exact integer arithmetic.
TransversalityVerdict verify_t_transversality(const CssCode& q,
                                              std::size_t limit = kDefaultEnumerationLimit);

/// Transversal T_X = H T H on the mirror block, by reduction to the T check
/// on the source code. q_mirror must equal mirror(q_source) at row-space level.
TransversalityVerdict verify_tx_transversality(const CssCode& q_mirror, const CssCode& q_source,
                                               std::size_t limit = kDefaultEnumerationLimit);

/// Transversal Toffoli across (block1, block2 -> block3): for all labels and
/// X-coset elements, (x1+y1) AND (x2+y2) lands in the correct coset of
/// block3's X-stabilizer space.
TransversalityVerdict verify_toffoli_transversality(const HybridSystem& sys,
                                                    std::size_t limit = kDefaultEnumerationLimit);

}  // namespace tricode
