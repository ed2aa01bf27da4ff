#include "tricode/transversality.hpp"

#include <stdexcept>

namespace tricode {

namespace {

BinaryVector label_vector(std::uint64_t bits, std::size_t k) {
  BinaryVector v(k);
  for (std::size_t i = 0; i < k; ++i)
    if ((bits >> i) & 1) v.set(i, true);
  return v;
}

// x_psi = psi . A
BinaryVector logical_rep(const CssCode& q, std::uint64_t psi) {
  BinaryVector x(q.n);
  for (std::size_t i = 0; i < q.k; ++i)
    if ((psi >> i) & 1) x.xor_with(q.map_a.row(i));
  return x;
}

void require_same_n(const CssCode& a, const CssCode& b, const char* who) {
  if (a.n != b.n) throw std::invalid_argument(std::string(who) + ": block lengths differ");
}

void check_label_limit(std::size_t k, std::size_t limit, const char* who) {
  if (k > limit)
    throw std::invalid_argument(std::string(who) + ": k = " + std::to_string(k) +
                                " exceeds enumeration limit " + std::to_string(limit));
}

}  // namespace

TransversalityVerdict check_cnot_condition(const CssCode& qa, const CssCode& qb) {
  require_same_n(qa, qb, "check_cnot_condition");
  TransversalityVerdict v;
  if (qa.k != qb.k) {
    v.detail = "logical dimensions differ (k_a = " + std::to_string(qa.k) +
               ", k_b = " + std::to_string(qb.k) + ")";
    return v;
  }
  ReducedBasis xb(qb.x_stab);
  v.checks_performed = qa.x_stab.rows() + qa.k;
  for (std::size_t r = 0; r < qa.x_stab.rows(); ++r) {
    if (!xb.contains(qa.x_stab.row(r))) {
      TransversalWitness w;
      w.vector = qa.x_stab.row(r);
      w.detail = "control X-stabilizer row outside target X-stabilizer space";
      v.witness = w;
      v.detail = "C2a-perp not contained in C4b-perp";
      return v;
    }
  }
  for (std::size_t i = 0; i < qa.k; ++i) {
    BinaryVector d = qa.map_a.row(i) ^ qb.map_a.row(i);
    if (!xb.contains(d)) {
      TransversalWitness w;
      w.psi_a = label_vector(std::uint64_t(1) << i, qa.k);
      w.vector = d;
      w.detail = "map rows for logical " + std::to_string(i) +
                 " differ by a vector outside the target X-stabilizer space";
      v.witness = w;
      v.detail = "quotient alignment fails at row " + std::to_string(i);
      return v;
    }
  }
  v.holds = true;
  v.detail = "stabilizer containment and row-aligned quotient congruence hold";
  return v;
}

TransversalityVerdict check_cz_condition(const CssCode& qa, const CssCode& qb) {
  require_same_n(qa, qb, "check_cz_condition");
  TransversalityVerdict v;
  if (qa.k != qb.k) {
    v.detail = "logical dimensions differ";
    return v;
  }
  ReducedBasis c4(qb.c2.gen);
  v.checks_performed = qa.k + qb.c1.gen.rows() + 1;
  for (std::size_t i = 0; i < qa.k; ++i) {
    if (!c4.contains(qa.map_a.row(i))) {
      TransversalWitness w;
      w.psi_a = label_vector(std::uint64_t(1) << i, qa.k);
      w.vector = qa.map_a.row(i);
      w.detail = "map row outside C4";
      v.witness = w;
      v.detail = "clause C1a/C2a-perp within C4b fails at row " + std::to_string(i);
      return v;
    }
  }
  ReducedBasis c2a(qa.c2.gen);
  for (std::size_t r = 0; r < qb.c1.gen.rows(); ++r) {
    if (!c2a.contains(qb.c1.gen.row(r))) {
      TransversalWitness w;
      w.vector = qb.c1.gen.row(r);
      w.detail = "C3 generator outside C2a";
      v.witness = w;
      v.detail = "clause C3b within C2a fails";
      return v;
    }
  }
  BinaryMatrix g = gram_matrix(qa.map_a, qb.map_a);
  if (!(g == BinaryMatrix::identity(qa.k))) {
    TransversalWitness w;
    for (std::size_t i = 0; i < qa.k && !v.witness; ++i)
      for (std::size_t j = 0; j < qa.k; ++j)
        if (g.get(i, j) != (i == j)) {
          w.psi_a = label_vector(std::uint64_t(1) << i, qa.k);
          w.psi_b = label_vector(std::uint64_t(1) << j, qa.k);
          w.phase_lhs = g.get(i, j);
          w.phase_rhs = (i == j);
          w.detail = "A.B^T entry (" + std::to_string(i) + "," + std::to_string(j) +
                     ") = " + std::to_string(int(g.get(i, j)));
          v.witness = w;
          i = qa.k;  // break outer
          break;
        }
    v.detail = "clause A.B^T = I fails";
    return v;
  }
  v.holds = true;
  v.detail = "all three clauses hold (containments and A.B^T = I)";
  return v;
}

TransversalityVerdict verify_cnot_coset(const CssCode& qa, const CssCode& qb, std::size_t limit) {
  require_same_n(qa, qb, "verify_cnot_coset");
  TransversalityVerdict v;
  if (qa.k != qb.k) {
    v.detail = "logical dimensions differ";
    return v;
  }
  check_label_limit(qa.k, limit, "verify_cnot_coset");
  ReducedBasis xb(qb.x_stab);
  std::vector<BinaryVector> ya_list = enumerate_rowspace(qa.x_stab, limit);
  const std::uint64_t nlabels = std::uint64_t(1) << qa.k;
  // y_b is modded out: adding any element of qb's X-stabilizer space to the
  // target ket does not change its coset, so one membership test per y_a
  // settles the whole y_b orbit.
  for (std::uint64_t pa = 0; pa < nlabels; ++pa) {
    BinaryVector xa = logical_rep(qa, pa);
    for (std::uint64_t pb = 0; pb < nlabels; ++pb) {
      BinaryVector expect = logical_rep(qb, pb) ^ logical_rep(qb, pa ^ pb);
      for (const BinaryVector& ya : ya_list) {
        ++v.checks_performed;
        BinaryVector sum = xa ^ ya ^ expect;
        if (!xb.contains(sum)) {
          TransversalWitness w;
          w.psi_a = label_vector(pa, qa.k);
          w.psi_b = label_vector(pb, qb.k);
          w.y_a = ya;
          w.vector = sum;
          w.detail = "control ket maps target coset psi_b to the wrong coset";
          v.witness = w;
          v.detail = "coset transport fails";
          return v;
        }
      }
    }
  }
  v.holds = true;
  v.detail = "all control kets shift target cosets correctly";
  return v;
}

TransversalityVerdict verify_cz_phase(const CssCode& qa, const CssCode& qb, std::size_t limit) {
  require_same_n(qa, qb, "verify_cz_phase");
  TransversalityVerdict v;
  if (qa.k != qb.k) {
    v.detail = "logical dimensions differ";
    return v;
  }
  check_label_limit(qa.k, limit, "verify_cz_phase");
  std::vector<BinaryVector> ya_list = enumerate_rowspace(qa.x_stab, limit);
  std::vector<BinaryVector> yb_list = enumerate_rowspace(qb.x_stab, limit);
  const std::uint64_t nlabels = std::uint64_t(1) << qa.k;
  for (std::uint64_t pa = 0; pa < nlabels; ++pa) {
    BinaryVector xa = logical_rep(qa, pa);
    for (std::uint64_t pb = 0; pb < nlabels; ++pb) {
      BinaryVector xbv = logical_rep(qb, pb);
      int want = int(label_vector(pa, qa.k).dot(label_vector(pb, qb.k)));
      for (const BinaryVector& ya : ya_list) {
        BinaryVector u = xa ^ ya;
        for (const BinaryVector& yb : yb_list) {
          ++v.checks_performed;
          BinaryVector w2 = xbv ^ yb;
          int got = int(u.dot(w2));
          if (got != want) {
            TransversalWitness w;
            w.psi_a = label_vector(pa, qa.k);
            w.psi_b = label_vector(pb, qb.k);
            w.y_a = ya;
            w.y_b = yb;
            w.phase_lhs = got;
            w.phase_rhs = want;
            w.detail = "u.v parity differs from psi_a.psi_b";
            v.witness = w;
            v.detail = "phase not constant over cosets";
            return v;
          }
        }
      }
    }
  }
  v.holds = true;
  v.detail = "u.v = psi_a.psi_b for every coset pair";
  return v;
}

TransversalityVerdict verify_t_transversality(const CssCode& q, std::size_t limit) {
  TransversalityVerdict v;
  check_label_limit(q.k, limit, "verify_t_transversality");
  std::vector<BinaryVector> y_list = enumerate_rowspace(q.x_stab, limit);
  const std::uint64_t nlabels = std::uint64_t(1) << q.k;
  std::vector<int> coset_weight(nlabels, 0);
  for (std::uint64_t psi = 0; psi < nlabels; ++psi) {
    BinaryVector x = logical_rep(q, psi);
    int w0 = -1;
    for (const BinaryVector& y : y_list) {
      ++v.checks_performed;
      int w = int((x ^ y).weight() % 8);
      if (w0 < 0) w0 = w;
      if (w != w0) {
        TransversalWitness wit;
        wit.psi_a = label_vector(psi, q.k);
        wit.y_a = y_list[0];
        wit.y_b = y;
        wit.phase_lhs = w0;
        wit.phase_rhs = w;
        wit.detail = "coset weights differ mod 8";
        v.witness = wit;
        v.detail = "weight not constant mod 8 on coset " + std::to_string(psi);
        return v;
      }
    }
    coset_weight[psi] = w0;
  }
  std::int64_t plus_bad = -1, minus_bad = -1;  // first psi breaking each sign reading
  for (std::uint64_t psi = 0; psi < nlabels; ++psi) {
    int d = ((coset_weight[psi] - coset_weight[0]) % 8 + 8) % 8;
    int ones = int(label_vector(psi, q.k).weight() % 8);
    if (d != ones && plus_bad < 0) plus_bad = std::int64_t(psi);
    if (d != (8 - ones) % 8 && minus_bad < 0) minus_bad = std::int64_t(psi);
  }
  if (plus_bad >= 0 && minus_bad >= 0) {
    TransversalWitness wit;
    wit.psi_a = label_vector(std::uint64_t(plus_bad), q.k);
    wit.psi_b = label_vector(std::uint64_t(minus_bad), q.k);
    wit.phase_lhs = ((coset_weight[plus_bad] - coset_weight[0]) % 8 + 8) % 8;
    wit.phase_rhs = ((coset_weight[minus_bad] - coset_weight[0]) % 8 + 8) % 8;
    wit.detail = "psi_a breaks the +|psi| reading, psi_b breaks the -|psi| reading (offsets in "
                 "phase_lhs/phase_rhs)";
    v.witness = wit;
    v.detail = "no uniform sign makes the induced phase logical T or T-dagger";
    return v;
  }
  const bool plus_ok = plus_bad < 0;
  v.holds = true;
  v.induced_sign = plus_ok ? +1 : -1;
  v.detail = v.induced_sign > 0 ? "physical T^n acts as logical T per qubit"
                                : "physical T^n acts as logical T-dagger per qubit";
  return v;
}

TransversalityVerdict verify_tx_transversality(const CssCode& q_mirror, const CssCode& q_source,
                                               std::size_t limit) {
  require_same_n(q_mirror, q_source, "verify_tx_transversality");
  bool pair_ok = q_mirror.k == q_source.k &&
                 same_rowspace(q_mirror.x_stab, q_source.z_stab) &&
                 same_rowspace(q_mirror.z_stab, q_source.x_stab) &&
                 same_rowspace(q_mirror.c1.gen, q_source.c2.gen) &&
                 same_rowspace(q_mirror.c2.gen, q_source.c1.gen);
  if (!pair_ok)
    throw std::invalid_argument("verify_tx_transversality: blocks are not a mirror pair");
  TransversalityVerdict v = verify_t_transversality(q_source, limit);
  v.detail = "reduced via T_X = H T H: Hadamards swap the mirror's basis expansion into the "
             "source code's, so transversal T_X on the mirror follows from transversal T on the "
             "source (" + v.detail + ")";
  return v;
}

TransversalityVerdict verify_toffoli_transversality(const HybridSystem& sys, std::size_t limit) {
  require_same_n(sys.block1, sys.block2, "verify_toffoli_transversality");
  require_same_n(sys.block1, sys.block3, "verify_toffoli_transversality");
  if (sys.block1.k != sys.block2.k || sys.block1.k != sys.block3.k)
    throw std::invalid_argument("verify_toffoli_transversality: logical dimensions differ");
  const std::size_t k = sys.block1.k;
  TransversalityVerdict v;
  check_label_limit(k, limit, "verify_toffoli_transversality");
  std::vector<BinaryVector> y1_list = enumerate_rowspace(sys.block1.x_stab, limit);
  std::vector<BinaryVector> y2_list = enumerate_rowspace(sys.block2.x_stab, limit);
  ReducedBasis target_space(sys.block3.x_stab);
  const std::uint64_t nlabels = std::uint64_t(1) << k;
  for (std::uint64_t p1 = 0; p1 < nlabels; ++p1) {
    BinaryVector x1 = logical_rep(sys.block1, p1);
    for (std::uint64_t p2 = 0; p2 < nlabels; ++p2) {
      BinaryVector x2 = logical_rep(sys.block2, p2);
      BinaryVector psi_and = label_vector(p1, k).and_with(label_vector(p2, k));
      std::uint64_t p3 = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (psi_and.get(i)) p3 |= std::uint64_t(1) << i;
      BinaryVector x3 = logical_rep(sys.block3, p3);
      for (const BinaryVector& y1 : y1_list) {
        BinaryVector u = x1 ^ y1;
        for (const BinaryVector& y2 : y2_list) {
          ++v.checks_performed;
          BinaryVector prod = u.and_with(x2 ^ y2) ^ x3;
          if (!target_space.contains(prod)) {
            TransversalWitness w;
            w.psi_a = label_vector(p1, k);
            w.psi_b = label_vector(p2, k);
            w.y_a = y1;
            w.y_b = y2;
            w.vector = prod;
            w.detail = "componentwise product leaves the expected coset of block3";
            v.witness = w;
            v.detail = "Toffoli coset condition fails";
            return v;
          }
        }
      }
    }
  }
  v.holds = true;
  v.detail = "AND of control cosets always lands in the correct target coset";
  return v;
}

}  // namespace tricode
