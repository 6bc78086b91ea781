#include "doctest.h"

#include "branchkit/parabolic.hpp"

using namespace branchkit;

namespace {

struct Sl2Su11 {
  ChevalleyAlgebra a = build_algebra({{'A', 1}});
  SymmetricPair pair;
  Sl2Su11() {
    auto theta = sign_involution(a, {-1});
    pair = derive_pair(a, theta, theta);
  }
};

struct LadderPair {
  // sl2 + sl2, theta = su(1,1) x su(1,1), sigma = factor swap
  ChevalleyAlgebra a = build_algebra({{'A', 1}, {'A', 1}});
  SymmetricPair pair;
  LadderPair() {
    pair = derive_pair(a, sign_involution(a, {-1, -1}), swap_involution(a, 0, 1));
  }
  Element grading(long c1, long c2) const {
    Element x = a.zero();
    x[0] = c1;
    x[1] = c2;
    return x;
  }
};

}  // namespace

TEST_CASE("borel of sl2 from grading") {
  Sl2Su11 s;
  Element x = s.a.zero();
  x[0] = 1;
  auto pb = parabolic_from_grading(s.a, s.pair, x);
  CHECK(pb.q == Subspace::span_vectors({s.a.basis_element(0), s.a.basis_element(1)}, 3));
  CHECK(pb.u == Subspace::span_vectors({s.a.basis_element(1)}, 3));
  CHECK(pb.l == Subspace::span_vectors({s.a.basis_element(0)}, 3));
  CHECK(pb.s_dim == 0);
  CHECK(pb.two_rho_u == QVec{rat(2)});
  // u cap p = span{e}, weight 2 on h
  CHECK(pb.two_rho_u_cap_p == QVec{rat(2)});
  CHECK(is_sigma_open(s.a, pb, s.pair));
}

TEST_CASE("degenerate grading x = 0 gives q = g") {
  Sl2Su11 s;
  auto pb = parabolic_from_grading(s.a, s.pair, s.a.zero());
  CHECK(pb.q.dim() == 3);
  CHECK(pb.u.dim() == 0);
  CHECK(vec_is_zero(pb.two_rho_u));
}

TEST_CASE("mixed grading on sl2+sl2") {
  LadderPair lp;
  auto pb = parabolic_from_grading(lp.a, lp.pair, lp.grading(1, -1));
  CHECK(pb.u == Subspace::span_vectors({lp.a.basis_element(2), lp.a.basis_element(5)}, 6));
  CHECK(pb.q.dim() == 4);
}

TEST_CASE("grading must be theta-fixed and in the Cartan") {
  LadderPair lp;
  Element noth = lp.a.zero();
  noth[2] = 1;
  CHECK_THROWS_AS((void)parabolic_from_grading(lp.a, lp.pair, noth), Error);
  // with swap-theta, an asymmetric Cartan grading is not theta-fixed
  auto pair2 = derive_pair(lp.a, swap_involution(lp.a, 0, 1), swap_involution(lp.a, 0, 1));
  CHECK_THROWS_AS((void)parabolic_from_grading(lp.a, pair2, lp.grading(1, 0)), Error);
}

TEST_CASE("certify_parabolic on sl2 subspaces") {
  Sl2Su11 s;
  auto pair_id = derive_pair(s.a, sign_involution(s.a, {-1}), identity_involution(s.a));
  auto borel = Subspace::span_vectors({s.a.basis_element(0), s.a.basis_element(1)}, 3);
  auto res = certify_parabolic(s.a, pair_id, borel);
  CHECK(res.certified);
  CHECK(res.nilradical == Subspace::span_vectors({s.a.basis_element(1)}, 3));
  auto cartan_only = Subspace::span_vectors({s.a.basis_element(0)}, 3);
  CHECK_FALSE(certify_parabolic(s.a, pair_id, cartan_only).certified);
  auto whole = Subspace::full(3);
  auto res2 = certify_parabolic(s.a, pair_id, whole);
  CHECK(res2.certified);
  CHECK(res2.nilradical.dim() == 0);
}

TEST_CASE("ladder instance: q' is the diagonal Borel") {
  LadderPair lp;
  auto pb = parabolic_from_grading(lp.a, lp.pair, lp.grading(1, 1));
  CHECK(is_sigma_open(lp.a, pb, lp.pair));
  auto v = is_discretely_decomposable(lp.a, pb, lp.pair);
  CHECK(v.decomposable);
  CHECK(v.nilcone_criterion);
  CHECK(v.qprime_criterion);
  const Element hd = vec_add(lp.a.basis_element(0), lp.a.basis_element(1));
  const Element ed = vec_add(lp.a.basis_element(2), lp.a.basis_element(3));
  CHECK(v.qprime.qprime == Subspace::span_vectors({hd, ed}, 6));
  CHECK(v.qprime.nilradical == Subspace::span_vectors({ed}, 6));
  CHECK(v.qprime.levi == Subspace::span_vectors({hd}, 6));
}

TEST_CASE("ladder negative control: anti-diagonal grading is not decomposable") {
  LadderPair lp;
  auto pb = parabolic_from_grading(lp.a, lp.pair, lp.grading(1, -1));
  CHECK(is_sigma_open(lp.a, pb, lp.pair));
  auto v = is_discretely_decomposable(lp.a, pb, lp.pair);
  CHECK_FALSE(v.decomposable);
  CHECK_FALSE(v.nilcone_criterion);
  CHECK_FALSE(v.qprime_criterion);
  // witness e_d + f_d: non-nilpotent element of pr(u cap p)
  const Element expected =
      vec_add(vec_add(lp.a.basis_element(2), lp.a.basis_element(3)),
              vec_add(lp.a.basis_element(4), lp.a.basis_element(5)));
  CHECK(v.witness == expected);
  CHECK_FALSE(is_nilpotent_element(lp.a, v.witness));
}

TEST_CASE("sigma = theta instance always decomposes with q' = g'") {
  Sl2Su11 s;
  Element x = s.a.zero();
  x[0] = 1;
  auto pb = parabolic_from_grading(s.a, s.pair, x);
  auto v = is_discretely_decomposable(s.a, pb, s.pair);
  CHECK(v.decomposable);
  CHECK(v.qprime.qprime == s.pair.kprime);
  CHECK(v.qprime.nilradical.dim() == 0);
}

TEST_CASE("levi split on the ladder instance: torus Levi") {
  LadderPair lp;
  auto pb = parabolic_from_grading(lp.a, lp.pair, lp.grading(1, 1));
  auto v = is_discretely_decomposable(lp.a, pb, lp.pair);
  auto split = levi_split(lp.a, v.qprime, lp.pair);
  CHECK(split.l_c == v.qprime.levi);
  CHECK(split.l_n.dim() == 0);
  CHECK(split.h_c == v.qprime.levi);
  CHECK(split.simple_ideals.empty());
  CHECK(split.roots_c.empty());
  auto qpp = construct_qdoubleprime(lp.a, v.qprime, split, lp.pair);
  CHECK(qpp == v.qprime.qprime);  // b(torus) = torus
}

TEST_CASE("lemma unisub identities on the ladder instance") {
  LadderPair lp;
  auto pb = parabolic_from_grading(lp.a, lp.pair, lp.grading(1, 1));
  auto v = is_discretely_decomposable(lp.a, pb, lp.pair);
  auto split = levi_split(lp.a, v.qprime, lp.pair);
  auto qpp = construct_qdoubleprime(lp.a, v.qprime, split, lp.pair);
  // q cap g' = (q cap l'_c) + l'_n + u'
  const Subspace lhs = pb.q.intersect(lp.pair.gprime);
  const Subspace rhs = pb.q.intersect(split.l_c).sum(split.l_n).sum(v.qprime.nilradical);
  CHECK(lhs == rhs);
  // [(l'_n + u'), g] inside q + g'
  const Subspace ln_u = split.l_n.sum(v.qprime.nilradical);
  const Subspace target = pb.q.sum(lp.pair.gprime);
  CHECK(target.contains(bracket_span(lp.a, ln_u, Subspace::full(lp.a.dim))));
  // qbar cap g' inside bar(q')
  const Subspace barq = apply_linear_map(lp.pair.bar_matrix, v.qprime.qprime);
  CHECK(barq.contains(pb.qbar.intersect(lp.pair.gprime)));
  // pr(u cap p) = (q cap p')^{perp p'}
  const Subspace pr_up = project(lp.a, lp.pair, pb.u.intersect(lp.pair.p));
  const Subspace qcapp = pb.q.intersect(lp.pair.pprime);
  CHECK(pr_up == orthocomplement(lp.a.killing, qcapp, lp.pair.pprime));
  CHECK(qpp.intersect(lp.pair.pprime) == v.qprime.qprime.intersect(lp.pair.pprime));
}
