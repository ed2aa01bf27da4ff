#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tricode/codes.hpp"
#include "tricode/transversality.hpp"

using namespace tricode;

namespace {

CssCode builtin() { return builtin_15_1_3().base; }

CssCode all_ones_3() {
  return build_triorthogonal(BinaryMatrix::from_strings({"111"})).base;
}

// test-local reconstruction of a coset representative from a label
BinaryVector rep(const CssCode& q, const BinaryVector& label) {
  BinaryVector x(q.n);
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label.get(i)) x.xor_with(q.map_a.row(i));
  return x;
}

}  // namespace

TEST_CASE("cnot: builtin controls its mirror") {
  CssCode q = builtin(), m = mirror(q);
  TransversalityVerdict cond = check_cnot_condition(q, m);
  TransversalityVerdict coset = verify_cnot_coset(q, m);
  CHECK(cond.holds);
  CHECK(coset.holds);
  CHECK(coset.checks_performed == 64);  // 2 x 2 labels, 16 coset elements
}

TEST_CASE("cnot: reversed direction fails and the witness reproduces") {
  CssCode q = builtin(), m = mirror(q);
  TransversalityVerdict cond = check_cnot_condition(m, q);
  TransversalityVerdict coset = verify_cnot_coset(m, q);
  CHECK(!cond.holds);
  CHECK(!coset.holds);
  REQUIRE(coset.witness.has_value());
  const TransversalWitness& w = *coset.witness;
  // recompute the offending sum from the witness labels alone
  BinaryVector expect = rep(q, w.psi_b) ^ rep(q, w.psi_a ^ w.psi_b);
  BinaryVector sum = rep(m, w.psi_a) ^ w.y_a ^ expect;
  CHECK(sum == w.vector);
  CHECK(!rowspace_contains(q.x_stab, sum));
  CHECK(rowspace_contains(m.x_stab, w.y_a));
}

TEST_CASE("condition check and coset verification always agree") {
  CssCode q = builtin(), m = mirror(q);
  std::vector<std::pair<CssCode, CssCode>> pairs = {{q, m}, {m, q}, {q, q}, {m, m}};
  for (const auto& [a, b] : pairs) {
    CHECK(check_cnot_condition(a, b).holds == verify_cnot_coset(a, b).holds);
    CHECK(check_cz_condition(a, b).holds == verify_cz_phase(a, b).holds);
  }
}

TEST_CASE("cz: builtin with mirror holds, including the pairing clause") {
  CssCode q = builtin(), m = mirror(q);
  TransversalityVerdict cond = check_cz_condition(q, m);
  TransversalityVerdict phase = verify_cz_phase(q, m);
  CHECK(cond.holds);
  CHECK(phase.holds);
  CHECK(phase.checks_performed == 65536);  // 4 label pairs x 16 x 1024 coset pairs
  // the pairing clause in matrix form: map_a(q) . map_a(m)^T = I
  BinaryMatrix g = gram_matrix(q.map_a, m.map_a);
  CHECK(g == BinaryMatrix::identity(1));
}

TEST_CASE("cz: a triorthogonal code pairs with itself") {
  // pairwise triorthogonality forces C1 in C2 and unit diagonal overlaps,
  // so the self-pairing conditions hold for the builtin code
  CssCode q = builtin();
  CHECK(check_cz_condition(q, q).holds);
  CHECK(verify_cz_phase(q, q).holds);
  CHECK(gram_matrix(q.map_a, q.map_a) == BinaryMatrix::identity(1));
}

TEST_CASE("cz: mirror with itself fails and the witness reproduces") {
  CssCode m = mirror(builtin());
  TransversalityVerdict cond = check_cz_condition(m, m);
  TransversalityVerdict phase = verify_cz_phase(m, m);
  CHECK(!cond.holds);
  CHECK(!phase.holds);
  REQUIRE(phase.witness.has_value());
  const TransversalWitness& w = *phase.witness;
  BinaryVector u = rep(m, w.psi_a) ^ w.y_a;
  BinaryVector v = rep(m, w.psi_b) ^ w.y_b;
  CHECK(int(u.dot(v)) == w.phase_lhs);
  CHECK(int(w.psi_a.dot(w.psi_b)) == w.phase_rhs);
  CHECK(w.phase_lhs != w.phase_rhs);
}

TEST_CASE("t: builtin holds as logical T-dagger") {
  TransversalityVerdict v = verify_t_transversality(builtin());
  CHECK(v.holds);
  CHECK(v.induced_sign == -1);
  CHECK(v.checks_performed == 32);  // 2 labels x 16 coset elements
}

TEST_CASE("t: coset weights of the builtin are 7 or 15") {
  CssCode q = builtin();
  BinaryVector x = rep(q, BinaryVector::from_string("1"));
  for (const BinaryVector& y : enumerate_rowspace(q.x_stab)) {
    std::size_t w = (x ^ y).weight();
    CHECK((w == 7 || w == 15));
  }
}

TEST_CASE("t: trivial single-qubit code holds with sign +1") {
  auto full = ClassicalCode::from_generator(BinaryMatrix::identity(1));
  CssCode q = build_css(full, full);
  TransversalityVerdict v = verify_t_transversality(q);
  CHECK(v.holds);
  CHECK(v.induced_sign == +1);
}

TEST_CASE("t: the all-ones [[3,1]] code fails with offset witnesses") {
  TransversalityVerdict v = verify_t_transversality(all_ones_3());
  CHECK(!v.holds);
  CHECK(v.induced_sign == 0);
  REQUIRE(v.witness.has_value());
  // the nontrivial coset is the single vector 111: offset 3 breaks both signs
  CHECK(v.witness->phase_lhs == 3);
  CHECK(v.witness->phase_rhs == 3);
}

TEST_CASE("tx: holds on the mirror of the builtin") {
  CssCode q = builtin(), m = mirror(q);
  TransversalityVerdict v = verify_tx_transversality(m, q);
  CHECK(v.holds);
  CHECK(v.induced_sign == -1);
}

TEST_CASE("tx: rejects blocks that are not a mirror pair") {
  CssCode q = builtin();
  CHECK_THROWS_AS(verify_tx_transversality(q, q), std::invalid_argument);
}

TEST_CASE("toffoli: two builtins into the mirror, exhaustively") {
  CssCode q = builtin(), m = mirror(q);
  TransversalityVerdict v = verify_toffoli_transversality({q, q, m});
  CHECK(v.holds);
  CHECK(v.checks_performed == 1024);  // 4 label pairs x 16 x 16 coset choices
}

TEST_CASE("toffoli: three builtins fail and the witness reproduces") {
  CssCode q = builtin();
  TransversalityVerdict v = verify_toffoli_transversality({q, q, q});
  CHECK(!v.holds);
  REQUIRE(v.witness.has_value());
  const TransversalWitness& w = *v.witness;
  BinaryVector prod = (rep(q, w.psi_a) ^ w.y_a).and_with(rep(q, w.psi_b) ^ w.y_b) ^
                      rep(q, w.psi_a.and_with(w.psi_b));
  CHECK(prod == w.vector);
  CHECK(!rowspace_contains(q.x_stab, prod));
  CHECK(rowspace_contains(q.x_stab, w.y_a));
  CHECK(rowspace_contains(q.x_stab, w.y_b));
}

TEST_CASE("toffoli: mismatched blocks are rejected") {
  CssCode q = builtin();
  CHECK_THROWS_AS(verify_toffoli_transversality({q, q, all_ones_3()}),
                  std::invalid_argument);
}
