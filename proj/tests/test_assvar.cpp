#include "doctest.h"

#include "branchkit/assvar.hpp"
#include "branchkit/branching.hpp"

using namespace branchkit;

TEST_CASE("saturation dimensions on sl2 su(1,1)") {
  auto a = build_algebra({{'A', 1}});
  auto theta = sign_involution(a, {-1});
  auto pair = derive_pair(a, theta, theta);
  // acting = k = span{h}, s = span{f}
  auto s = Subspace::span_vectors({a.basis_element(2)}, a.dim);
  auto oc = saturation_dimension(a, pair.k, s, 1);
  CHECK(oc.dimension == 1);  // [h, f] stays in span{f}
  CHECK(oc.samples_tried > 0);
  auto zero = saturation_dimension(a, pair.k, Subspace::zero(a.dim), 1);
  CHECK(zero.dimension == 0);
  // acting must be a subalgebra
  auto notalg = Subspace::span_vectors({a.basis_element(1), a.basis_element(2)}, a.dim);
  CHECK_THROWS_AS((void)saturation_dimension(a, notalg, s, 1), Error);
}

TEST_CASE("saturation is monotone and bounded") {
  auto a = build_algebra({{'A', 2}});
  auto pair = derive_pair(a, sign_involution(a, {-1, -1}), identity_involution(a));
  auto s = Subspace::span_vectors({a.basis_element(a.e_index(0))}, a.dim);
  auto small = saturation_dimension(a, a.cartan_subspace(), s, 3);
  auto big = saturation_dimension(a, Subspace::full(a.dim), s, 3);
  CHECK(small.dimension >= s.dim());
  CHECK(big.dimension >= small.dimension);
  CHECK(big.dimension <= a.dim);
  // nilpotent orbit closure of a root vector in sl3 has dimension 4
  CHECK(big.dimension == 4);
}

TEST_CASE("projection equality and density on the ladder instance") {
  auto a = build_algebra({{'A', 1}, {'A', 1}});
  auto pair = derive_pair(a, sign_involution(a, {-1, -1}), swap_involution(a, 0, 1));
  Element x = a.zero();
  x[0] = 1;
  x[1] = 1;
  auto pb = parabolic_from_grading(a, pair, x);
  auto v = is_discretely_decomposable(a, pb, pair);
  auto split = levi_split(a, v.qprime, pair);
  auto qpp = construct_qdoubleprime(a, v.qprime, split, pair);
  auto pe = projection_equality_check(a, pb, pair, v.qprime, qpp);
  CHECK(pe.all_equal());
  const Element ed = vec_add(a.basis_element(2), a.basis_element(3));
  CHECK(pe.pr_u_p == Subspace::span_vectors({ed}, a.dim));
  auto rep = assvar_report(a, pb, pair, v.qprime, qpp, 1);
  CHECK(rep.k_saturation.dimension == 1);
  CHECK(rep.kprime_saturation.dimension == 1);
  CHECK(rep.density_match);
}

TEST_CASE("sigma = theta: all assvar subspaces vanish on the p' = 0 side") {
  auto a = build_algebra({{'A', 1}});
  auto theta = sign_involution(a, {-1});
  auto pair = derive_pair(a, theta, theta);
  Element x = a.zero();
  x[0] = 1;
  auto pb = parabolic_from_grading(a, pair, x);
  auto v = is_discretely_decomposable(a, pb, pair);
  auto split = levi_split(a, v.qprime, pair);
  auto qpp = construct_qdoubleprime(a, v.qprime, split, pair);
  auto rep = assvar_report(a, pb, pair, v.qprime, qpp, 5);
  CHECK(rep.projection.all_equal());
  CHECK(rep.projection.pr_u_p.dim() == 0);
  CHECK(rep.k_saturation.dimension == 1);      // Ad(K)(ubar cap p) = span{f}
  CHECK(rep.kprime_saturation.dimension == 0); // ubar'' cap p' = 0
  CHECK(rep.density_match);
}
