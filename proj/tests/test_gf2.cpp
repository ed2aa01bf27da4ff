#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tricode/gf2.hpp"

using namespace tricode;

namespace {

BinaryMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                           double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

// independent oracle: naive O(n^3) rank by Gaussian elimination on a bool grid
std::size_t naive_rank(const BinaryMatrix& m) {
  std::vector<std::vector<bool>> a(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !a[pivot][col]) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && a[r][col])
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = a[r][c] ^ a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("binary vector basics") {
  BinaryVector v = BinaryVector::from_string("101100");
  CHECK(v.size() == 6);
  CHECK(v.weight() == 3);
  CHECK(v.get(0));
  CHECK(!v.get(1));
  CHECK(v.to_string() == "101100");

  BinaryVector w = BinaryVector::from_string("011100");
  CHECK((v ^ w).to_string() == "110000");
  CHECK(v.and_with(w).to_string() == "001100");
  CHECK(v.dot(w) == false);  // overlap weight 2
  CHECK(v.dot(v) == true);   // odd self-overlap
  v.flip(1);
  CHECK(v.to_string() == "111100");
  CHECK(!v.is_zero());
  CHECK(BinaryVector(4).is_zero());
}

TEST_CASE("vector xor across word boundaries") {
  BinaryVector a(130), b(130);
  a.set(0, true);
  a.set(64, true);
  a.set(129, true);
  b.set(64, true);
  b.set(128, true);
  BinaryVector c = a ^ b;
  CHECK(c.weight() == 3);
  CHECK(c.get(0));
  CHECK(!c.get(64));
  CHECK(c.get(128));
  CHECK(c.get(129));
  CHECK(a.dot(b) == true);
}

TEST_CASE("matrix text parsing") {
  BinaryMatrix m = BinaryMatrix::parse("# comment\n1 0 1\n010\n\n# done\n111\n");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  CHECK(m.row(0).to_string() == "101");
  CHECK(m.row(2).to_string() == "111");

  CHECK_THROWS_AS(BinaryMatrix::parse("10\n111\n"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix::parse("1x0\n"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix::parse("# only a comment\n"), std::invalid_argument);
}

TEST_CASE("text round trip") {
  BinaryMatrix m = BinaryMatrix::from_strings({"1100", "0011", "1010"});
  CHECK(BinaryMatrix::parse(m.to_text()) == m);
}

TEST_CASE("rref canonical form") {
  BinaryMatrix m = BinaryMatrix::from_strings({"110", "011", "101"});
  RrefResult rr = rref(m);
  CHECK(rr.rank == 2);  // third row is the sum of the first two
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(rr.reduced.row(0).to_string() == "101");
  CHECK(rr.reduced.row(1).to_string() == "011");
  // idempotent
  RrefResult again = rref(rr.reduced);
  CHECK(again.reduced == rr.reduced);
}

TEST_CASE("rank matches naive elimination on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatrix m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 7) % 13);
    CHECK(gf2_rank(m) == naive_rank(m));
  }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    BinaryMatrix m = random_matrix(rng, 2 + trial % 6, 4 + trial % 9);
    BinaryMatrix ns = nullspace(m);
    CHECK(ns.rows() == m.cols() - gf2_rank(m));
    for (std::size_t i = 0; i < ns.rows(); ++i)
      for (std::size_t r = 0; r < m.rows(); ++r)
        CHECK(m.row(r).dot(ns.row(i)) == false);
    CHECK(gf2_rank(ns) == ns.rows());  // basis is independent
    // double dual returns the original row space
    CHECK(same_rowspace(nullspace(ns), rref(m).reduced));
  }
}

TEST_CASE("nullspace of an empty matrix is the full space") {
  BinaryMatrix empty(0, 5);
  BinaryMatrix ns = nullspace(empty);
  CHECK(ns.rows() == 5);
  CHECK(same_rowspace(ns, BinaryMatrix::identity(5)));
}

TEST_CASE("reduced basis membership and reduction") {
  BinaryMatrix m = BinaryMatrix::from_strings({"11000", "00110", "11110"});
  ReducedBasis basis(m);
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(BinaryVector::from_string("11110")));
  CHECK(basis.contains(BinaryVector(5)));
  CHECK(!basis.contains(BinaryVector::from_string("10000")));
  BinaryVector v = BinaryVector::from_string("11001");
  BinaryVector reduced = basis.reduce(v);
  CHECK ((v ^ reduced).is_zero() == false);
  CHECK(basis.contains(v ^ reduced));       // difference lies in the span
  CHECK(basis.reduce(reduced) == reduced);  // canonical
}

TEST_CASE("rowspace enumeration visits every element once") {
  BinaryMatrix m = BinaryMatrix::from_strings({"1100", "0110", "1010"});  // rank 2
  auto all = enumerate_rowspace(m);
  CHECK(all.size() == 4);
  ReducedBasis basis(m);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(basis.contains(all[i]));
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
  }
  CHECK_THROWS_AS(enumerate_rowspace(BinaryMatrix::identity(30), 24), std::invalid_argument);
}

TEST_CASE("subspace and same-rowspace predicates") {
  BinaryMatrix a = BinaryMatrix::from_strings({"1100"});
  BinaryMatrix b = BinaryMatrix::from_strings({"1100", "0011"});
  CHECK(is_subspace(a, b));
  CHECK(!is_subspace(b, a));
  CHECK(same_rowspace(b, BinaryMatrix::from_strings({"1111", "0011"})));
  CHECK(rowspace_contains(b, BinaryVector::from_string("1111")));
  CHECK(!rowspace_contains(b, BinaryVector::from_string("1000")));
}

TEST_CASE("quotient basis dimensions and representatives") {
  BinaryMatrix whole = BinaryMatrix::from_strings({"1111", "1100", "0011"});  // rank 2... plus
  BinaryMatrix sub = BinaryMatrix::from_strings({"1111"});
  BinaryMatrix q = quotient_basis(whole, sub);
  CHECK(q.rows() == gf2_rank(whole.vstack(sub)) - gf2_rank(sub));
  // representatives stay independent modulo the subspace
  ReducedBasis sub_basis(sub);
  for (std::size_t i = 0; i < q.rows(); ++i) CHECK(!sub_basis.contains(q.row(i)));
}

TEST_CASE("weight enumerator: direct vs transform") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    BinaryMatrix m = random_matrix(rng, 8 + trial % 4, 12 + trial % 3);
    std::size_t n = m.cols();
    std::size_t r = gf2_rank(m);
    std::vector<BigCount> direct = weight_enumerator(m, 24);
    BigCount total = 0;
    for (const BigCount& c : direct) total += c;
    CHECK(total == BigCount(1) << r);
    CHECK(direct.size() == n + 1);
    CHECK(direct[0] == 1);
    if (n - r <= 6 && r > n - r) {
      // force the dual-transform path by shrinking the limit below the rank
      std::vector<BigCount> via_dual = weight_enumerator(m, n - r);
      CHECK(via_dual == direct);
    }
  }
}

TEST_CASE("weight enumerator throws when both routes exceed the limit") {
  std::mt19937 rng(99);
  BinaryMatrix m = random_matrix(rng, 40, 80);  // rank ~40, dual rank ~40
  CHECK_THROWS_AS(weight_enumerator(m, 10), std::invalid_argument);
}

TEST_CASE("gram matrix of inner products") {
  BinaryMatrix a = BinaryMatrix::from_strings({"111", "110"});
  BinaryMatrix b = BinaryMatrix::from_strings({"101", "011"});
  BinaryMatrix g = gram_matrix(a, b);
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 2);
  CHECK(g.get(0, 0) == false);  // 111 . 101 = 2
  CHECK(g.get(0, 1) == false);  // 111 . 011 = 2
  CHECK(g.get(1, 0) == true);   // 110 . 101 = 1
  CHECK(g.get(1, 1) == true);   // 110 . 011 = 1
}
