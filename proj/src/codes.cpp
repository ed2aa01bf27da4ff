#include "tricode/codes.hpp"

#include <limits>
#include <stdexcept>

namespace tricode {

ClassicalCode ClassicalCode::from_generator(const BinaryMatrix& g) {
  ClassicalCode c;
  c.n = g.cols();
  c.gen = rref(g).reduced;
  c.dim = c.gen.rows();
  return c;
}

TriReport check_triorthogonal(const BinaryMatrix& g) {
  TriReport rep;
  const std::size_t m = g.rows();
  for (std::size_t r = 0; r < m; ++r) {
    if (g.row(r).weight() & 1) rep.odd_rows.push_back(r);
    else rep.even_rows.push_back(r);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (g.row(a).and_with(g.row(b)).weight() & 1)
        rep.pair_violations.push_back({a, b});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      BinaryVector ab = g.row(a).and_with(g.row(b));
      for (std::size_t c = b + 1; c < m; ++c)
        if (ab.and_with(g.row(c)).weight() & 1)
          rep.triple_violations.push_back({a, b, c});
    }
  rep.is_triorthogonal = rep.pair_violations.empty() && rep.triple_violations.empty();
  return rep;
}

CssCode build_css(const ClassicalCode& c1, const ClassicalCode& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("build_css: block lengths differ");
  CssCode q;
  q.n = c1.n;
  q.c1 = c1;
  q.c2 = c2;
  q.x_stab = nullspace(c2.gen);
  q.z_stab = nullspace(c1.gen);

  // dual containment: C2-perp must lie inside C1
  ReducedBasis c1_basis(c1.gen);
  for (std::size_t r = 0; r < q.x_stab.rows(); ++r)
    if (!c1_basis.contains(q.x_stab.row(r)))
      throw std::invalid_argument("build_css: dual containment violated; witness row " +
                                  q.x_stab.row(r).to_string() + " of C2-perp is outside C1");

  if (c1.dim + c2.dim < q.n)
    throw std::invalid_argument("build_css: k1 + k2 - n is negative");
  q.k = c1.dim + c2.dim - q.n;
  q.map_a = quotient_basis(c1.gen, q.x_stab);
  if (q.map_a.rows() != q.k)
    throw std::logic_error("build_css: quotient dimension does not match k");
  return q;
}

TriorthogonalCode build_triorthogonal(const BinaryMatrix& g) {
  TriReport rep = check_triorthogonal(g);
  if (!rep.is_triorthogonal) {
    std::string msg = "build_triorthogonal: matrix is not triorthogonal;";
    if (!rep.pair_violations.empty())
      msg += " first pair violation (" + std::to_string(rep.pair_violations[0][0]) + "," +
             std::to_string(rep.pair_violations[0][1]) + ")";
    if (!rep.triple_violations.empty())
      msg += " first triple violation (" + std::to_string(rep.triple_violations[0][0]) + "," +
             std::to_string(rep.triple_violations[0][1]) + "," +
             std::to_string(rep.triple_violations[0][2]) + ")";
    throw std::invalid_argument(msg);
  }
  if (rep.odd_rows.empty())
    throw std::invalid_argument("build_triorthogonal: no odd-weight rows (k = 0, nothing to encode)");
  if (gf2_rank(g) != g.rows())
    throw std::invalid_argument("build_triorthogonal: generator rows are dependent; "
                                "k = |G1| requires [G1; G0] to have full row rank");

  TriorthogonalCode t;
  t.g1 = BinaryMatrix(0, g.cols());
  t.g0 = BinaryMatrix(0, g.cols());
  for (std::size_t r : rep.odd_rows) t.g1.append_row(g.row(r));
  for (std::size_t r : rep.even_rows) t.g0.append_row(g.row(r));

  CssCode& q = t.base;
  q.n = g.cols();
  q.k = t.g1.rows();
  q.c1 = ClassicalCode::from_generator(g);
  q.c2 = ClassicalCode::from_generator(nullspace(t.g0));
  q.x_stab = t.g0;
  q.z_stab = nullspace(g);
  q.map_a = t.g1;
  return t;
}

CssCode mirror(const CssCode& q) {
  CssCode m;
  m.n = q.n;
  m.k = q.k;
  m.c1 = q.c2;
  m.c2 = q.c1;
  m.x_stab = q.z_stab;
  m.z_stab = q.x_stab;
  m.map_a = quotient_basis(q.c2.gen, q.z_stab);
  if (m.map_a.rows() != m.k)
    throw std::logic_error("mirror: C2 / C1-perp dimension does not match k");
  return m;
}

TriorthogonalCode builtin_15_1_3() {
  BinaryMatrix g(5, 15);
  for (std::size_t j = 0; j < 15; ++j) g.set(0, j, true);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 15; ++j)
      if (((j + 1) >> i) & 1) g.set(i + 1, j, true);
  return build_triorthogonal(g);
}

std::size_t code_distance(const CssCode& q, std::size_t limit) {
  std::size_t d = std::numeric_limits<std::size_t>::max();
  ReducedBasis x_space(q.x_stab), z_space(q.z_stab);
  for_each_in_rowspace(q.c1.gen, [&](const BinaryVector& v) {
    if (v.is_zero() || x_space.contains(v)) return;
    d = std::min(d, v.weight());
  }, limit);
  for_each_in_rowspace(q.c2.gen, [&](const BinaryVector& v) {
    if (v.is_zero() || z_space.contains(v)) return;
    d = std::min(d, v.weight());
  }, limit);
  if (d == std::numeric_limits<std::size_t>::max())
    throw std::invalid_argument("code_distance: no logical operators (k = 0?)");
  return d;
}

}  // namespace tricode
