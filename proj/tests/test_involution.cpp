#include "doctest.h"

#include "branchkit/involution.hpp"

using namespace branchkit;

TEST_CASE("su(1,1)-style sign involution on sl2") {
  auto a = build_algebra({{'A', 1}});
  auto theta = sign_involution(a, {-1});
  auto pair = derive_pair(a, theta, theta);
  CHECK(pair.k == Subspace::span_vectors({a.basis_element(0)}, a.dim));
  CHECK(pair.p == Subspace::span_vectors({a.basis_element(1), a.basis_element(2)}, a.dim));
  // sigma = theta forces g' = k, p' = 0
  CHECK(pair.gprime == pair.k);
  CHECK(pair.pprime.dim() == 0);
}

TEST_CASE("identity involution fixes everything") {
  auto a = build_algebra({{'A', 1}});
  auto id = identity_involution(a);
  auto pair = derive_pair(a, sign_involution(a, {-1}), id);
  CHECK(pair.gprime.dim() == a.dim);
  CHECK(pair.pr_matrix == QMat::identity(a.dim));
}

TEST_CASE("factor swap on sl2+sl2 gives the diagonal") {
  auto a = build_algebra({{'A', 1}, {'A', 1}});
  auto sigma = swap_involution(a, 0, 1);
  auto theta = sign_involution(a, {-1, -1});
  auto pair = derive_pair(a, theta, sigma);
  CHECK(pair.gprime.dim() == 3);
  // h1+h2, e1+e2, f1+f2
  const Element hd = vec_add(a.basis_element(0), a.basis_element(1));
  const Element ed = vec_add(a.basis_element(2), a.basis_element(3));
  const Element fd = vec_add(a.basis_element(4), a.basis_element(5));
  CHECK(pair.gprime.contains(hd));
  CHECK(pair.gprime.contains(ed));
  CHECK(pair.gprime.contains(fd));
  CHECK(pair.kprime == Subspace::span_vectors({hd}, a.dim));
  CHECK(pair.pprime == Subspace::span_vectors({ed, fd}, a.dim));
  // projection of e1 is e_d/2
  auto img = project(a, pair, Subspace::span_vectors({a.basis_element(2)}, a.dim));
  CHECK(img == Subspace::span_vectors({ed}, a.dim));
  // s inside g' is fixed; s inside g^{-sigma} dies
  CHECK(project(a, pair, pair.gprime) == pair.gprime);
  CHECK(project(a, pair, pair.g_minus_sigma).dim() == 0);
}

TEST_CASE("projection is idempotent with the right image and kernel") {
  auto a = build_algebra({{'A', 2}});
  auto sigma = sign_involution(a, {1, -1});
  auto theta = sign_involution(a, {-1, -1});
  auto pair = derive_pair(a, theta, sigma);
  CHECK(mat_mul(pair.pr_matrix, pair.pr_matrix) == pair.pr_matrix);
  CHECK(apply_linear_map(pair.pr_matrix, Subspace::full(a.dim)) == pair.gprime);
  CHECK(kernel(pair.pr_matrix).rows == pair.g_minus_sigma.dim());
  CHECK(pair.k.dim() + pair.p.dim() == a.dim);
  CHECK(pair.kprime.dim() + pair.pprime.dim() == pair.gprime.dim());
  // theta restricted to g' is an involution with fixed set k'
  for (std::size_t i = 0; i < pair.gprime.dim(); ++i) {
    const Element v = pair.gprime.basis_vector(i);
    CHECK(pair.gprime.contains(mat_apply(pair.theta.matrix, v)));
  }
}

TEST_CASE("raw matrices are validated") {
  auto a = build_algebra({{'A', 1}});
  QMat bad = QMat::identity(a.dim);
  bad.at(0, 0) = 2;  // not involutive
  CHECK_THROWS_AS((void)involution_from_matrix(a, bad), Error);
  // a permutation that is involutive but not an automorphism: swap h and e
  QMat notauto(a.dim, a.dim);
  notauto.at(1, 0) = 1;
  notauto.at(0, 1) = 1;
  notauto.at(2, 2) = 1;
  CHECK_THROWS_AS((void)involution_from_matrix(a, notauto), Error);
  // non-commuting pair is rejected: compose swap with asymmetric signs
  auto aa = build_algebra({{'A', 1}, {'A', 1}});
  auto sw = swap_involution(aa, 0, 1);
  auto asym = sign_involution(aa, {-1, 1});
  CHECK_THROWS_AS((void)derive_pair(aa, asym, sw), Error);
}

TEST_CASE("chevalley involution is an automorphism") {
  for (auto spec : std::vector<std::vector<SimpleFactor>>{{{'A', 2}}, {{'B', 2}}, {{'G', 2}}}) {
    auto a = build_algebra(spec);
    CHECK_NOTHROW((void)involution_from_matrix(a, chevalley_involution_matrix(a)));
  }
}
