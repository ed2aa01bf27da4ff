#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricode/gf2.hpp"

namespace tricode {

/// Classical linear code given by a full-rank generator (canonical RREF basis).
struct ClassicalCode {
  std::size_t n = 0;
  BinaryMatrix gen;
  std::size_t dim = 0;

  static ClassicalCode from_generator(const BinaryMatrix& g);
};

/// CSS(C1, C2) with C2-perp contained in C1.
///
/// Basis states are uniform sums over cosets of the X-stabilizer space:
/// |psi>_L ~ sum_{y} |psi A + y>, where the rows of map_a represent
/// C1 / C2-perp. X-stabilizers generate C2-perp, Z-stabilizers generate
/// C1-perp, k = k1 + k2 - n.
struct CssCode {
  std::size_t n = 0;
  std::size_t k = 0;
  ClassicalCode c1, c2;
  BinaryMatrix x_stab;   // generates C2-perp
  BinaryMatrix z_stab;   // generates C1-perp
  BinaryMatrix map_a;    // k rows; coset representatives of C1 / C2-perp
};

struct TriReport {
  bool is_triorthogonal = false;
  std::vector<std::array<std::size_t, 2>> pair_violations;    // lexicographic
  std::vector<std::array<std::size_t, 3>> triple_violations;  // lexicographic
  std::vector<std::size_t> odd_rows;   // indices of odd-weight rows
  std::vector<std::size_t> even_rows;
};

/// Triorthogonal CSS code built from generator G = [G1; G0] (odd rows, then
/// even rows as partitioned by check_triorthogonal).
struct TriorthogonalCode {
  CssCode base;
  BinaryMatrix g1, g0;
};

/// Pairwise and triple-wise overlap parity check. Violations list every
/// offending index tuple in lexicographic order.
TriReport check_triorthogonal(const BinaryMatrix& g);

/// Validates dual containment (C2-perp in C1) and assembles the CSS data.
/// Throws std::invalid_argument naming a witness row on violation.
CssCode build_css(const ClassicalCode& c1, const ClassicalCode& c2);

/// C1 = rowspace(g), C2 = rowspace(nullspace(g0)); x_stab = g0 verbatim,
/// map_a = g1 verbatim, k = number of odd-weight rows.
TriorthogonalCode build_triorthogonal(const BinaryMatrix& g);

/// CSS(C2, C1): X- and Z-stabilizers swap; the mirror's map represents
/// C2 / C1-perp.
CssCode mirror(const CssCode& q);

/// The [[15,1,3]] code: G1 = all-ones, G0 = four weight-8 rows where row i
/// has bit j set iff bit i of the label j+1 is set (columns enumerate the
/// nonzero 4-bit labels; the punctured first-order Reed-Muller generator).
TriorthogonalCode builtin_15_1_3();

/// min weight over (C1 \ C2-perp) u (C2 \ C1-perp); brute-force enumeration.
std::size_t code_distance(const CssCode& q, std::size_t limit = kDefaultEnumerationLimit);

}  // namespace tricode
