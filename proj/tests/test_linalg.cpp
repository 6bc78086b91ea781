#include "doctest.h"

#include "branchkit/linalg.hpp"
#include "branchkit/poly.hpp"
#include "branchkit/subspace.hpp"

using namespace branchkit;

TEST_CASE("rref canonical form and rank") {
  QMat m = QMat::from_rows({{rat(2), rat(4), rat(6)}, {rat(1), rat(2), rat(3)}, {rat(0), rat(1), rat(1)}});
  auto piv = rref(m);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(m.rows == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(0, 2) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 2) == 1);
}

TEST_CASE("kernel times matrix is zero") {
  QMat m = QMat::from_rows({{rat(1), rat(2), rat(3), rat(4)}, {rat(2), rat(4), rat(6), rat(8)},
                            {rat(1), rat(0), rat(1), rat(0)}});
  QMat k = kernel(m);
  CHECK(k.rows == 2);
  for (std::size_t i = 0; i < k.rows; ++i) CHECK(vec_is_zero(mat_apply(m, k.row(i))));
}

TEST_CASE("solve consistent and inconsistent systems") {
  QMat m = QMat::from_rows({{rat(1), rat(1)}, {rat(1), rat(-1)}});
  bool ok = false;
  QVec x = solve(m, {rat(3), rat(1)}, ok);
  CHECK(ok);
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
  QMat s = QMat::from_rows({{rat(1), rat(1)}, {rat(2), rat(2)}});
  solve(s, {rat(1), rat(3)}, ok);
  CHECK_FALSE(ok);
}

TEST_CASE("inverse and determinant") {
  QMat m = QMat::from_rows({{rat(2), rat(1)}, {rat(7), rat(4)}});
  QMat inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == QMat::identity(2));
  CHECK(determinant(m) == 1);
  QMat sing = QMat::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  CHECK(determinant(sing) == 0);
}

TEST_CASE("subspace sum intersect modular law") {
  auto s1 = Subspace::span_vectors({{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}}, 3);
  auto s2 = Subspace::span_vectors({{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}, 3);
  auto sum = s1.sum(s2);
  auto inter = s1.intersect(s2);
  CHECK(sum.dim() == 3);
  CHECK(inter.dim() == 1);
  CHECK(inter.contains(QVec{rat(0), rat(1), rat(0)}));
  CHECK(sum.dim() + inter.dim() == s1.dim() + s2.dim());
  CHECK(s1.intersect(s1) == s1);
}

TEST_CASE("berkowitz matches charpoly of companion-style matrix") {
  // [[0,1],[ -6, 5 ]] has char poly x^2 - 5x + 6
  QMat m = QMat::from_rows({{rat(0), rat(1)}, {rat(-6), rat(5)}});
  QVec c = charpoly(m);
  CHECK(c[2] == 1);
  CHECK(c[1] == -5);
  CHECK(c[0] == 6);
}

TEST_CASE("berkowitz on generic symbolic 2x2") {
  // [[t0, 1],[0, t1]]: char = x^2 - (t0+t1)x + t0 t1
  PolyMat m(2, std::vector<Poly>(2, Poly(2)));
  m[0][0] = Poly::variable(2, 0);
  m[0][1] = Poly::constant(2, rat(1));
  m[1][1] = Poly::variable(2, 1);
  PolyBudget b;
  auto c = charpoly_berkowitz(m, b);
  CHECK(c[2] == Poly::constant(2, rat(1)));
  CHECK(c[1] == -(Poly::variable(2, 0) + Poly::variable(2, 1)));
  CHECK(c[0] == Poly::variable(2, 0) * Poly::variable(2, 1));
}

TEST_CASE("nonvanishing point search") {
  // t0*t1 vanishes on the axes; first hit should be (1,1)
  Poly p = Poly::variable(2, 0) * Poly::variable(2, 1);
  QVec pt;
  CHECK(find_nonvanishing_point(p, 3, pt));
  CHECK(pt[0] == 1);
  CHECK(pt[1] == 1);
}

TEST_CASE("lemma-style orthocomplement dimensions") {
  // standard dot product on Q^4
  QMat gram = QMat::identity(4);
  auto whole = Subspace::full(4);
  auto s = Subspace::span_vectors({{rat(1), rat(1), rat(0), rat(0)}}, 4);
  auto perp = orthocomplement(gram, s, whole);
  CHECK(perp.dim() == 3);
  for (std::size_t i = 0; i < perp.dim(); ++i)
    CHECK(dot(perp.basis_vector(i), QVec{rat(1), rat(1), rat(0), rat(0)}) == 0);
}
