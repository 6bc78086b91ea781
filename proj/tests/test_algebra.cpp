#include "doctest.h"

#include "branchkit/chevalley.hpp"

using namespace branchkit;

namespace {
ChevalleyAlgebra sl2() { return build_algebra({{'A', 1}}); }
}  // namespace

TEST_CASE("sl2 defining relations") {
  auto a = sl2();
  CHECK(a.dim == 3);
  const Element h = a.basis_element(0);
  const Element e = a.basis_element(1);
  const Element f = a.basis_element(2);
  CHECK(bracket(a, h, e) == vec_scale(e, rat(2)));
  CHECK(bracket(a, h, f) == vec_scale(f, rat(-2)));
  CHECK(bracket(a, e, f) == h);
  CHECK(vec_is_zero(bracket(a, e, e)));
  // bilinearity: [e+f, h] = -2e + 2f
  CHECK(bracket(a, vec_add(e, f), h) == vec_add(vec_scale(e, rat(-2)), vec_scale(f, rat(2))));
}

TEST_CASE("sl2 Killing form is the adjoint trace form") {
  auto a = sl2();
  const Element h = a.basis_element(0);
  const Element e = a.basis_element(1);
  const Element f = a.basis_element(2);
  CHECK(invariant_form(a, h, h) == 8);
  CHECK(invariant_form(a, e, e) == 0);
  CHECK(invariant_form(a, e, f) == 4);
  // independent oracle: trace of ad(x) ad(y)
  auto trace_form = [&](const Element& x, const Element& y) {
    const QMat m = mat_mul(ad_matrix(a, x), ad_matrix(a, y));
    Rat t(0);
    for (std::size_t i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
  };
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      CHECK(invariant_form(a, a.basis_element(i), a.basis_element(j)) ==
            trace_form(a.basis_element(i), a.basis_element(j)));
}

TEST_CASE("structure validation is exhaustive for small types") {
  for (auto spec : std::vector<std::vector<SimpleFactor>>{
           {{'A', 1}}, {{'A', 2}}, {{'A', 1}, {'A', 1}}, {{'B', 2}}, {{'C', 2}}, {{'G', 2}}}) {
    auto a = build_algebra(spec);  // build runs validate_structure
    CHECK(a.dim == algebra_dimension(spec));
  }
}

TEST_CASE("A2 dimensions and root counts") {
  auto a = build_algebra({{'A', 2}});
  CHECK(a.dim == 8);
  CHECK(a.rd.n_pos() == 3);
  auto g2 = build_algebra({{'G', 2}});
  CHECK(g2.dim == 14);
  CHECK(g2.rd.n_pos() == 6);
}

TEST_CASE("killing trace oracle on A2 and G2") {
  for (auto spec : std::vector<std::vector<SimpleFactor>>{{{'A', 2}}, {{'G', 2}}}) {
    auto a = build_algebra(spec);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = i; j < a.dim; ++j) {
        const QMat m = mat_mul(a.ad_basis[i], a.ad_basis[j]);
        Rat t(0);
        for (std::size_t k = 0; k < m.rows; ++k) t += m.at(k, k);
        CHECK(a.killing.at(i, j) == t);
      }
  }
}

TEST_CASE("dimension bound is enforced") {
  BuildOptions opts;
  opts.dim_bound = 10;
  CHECK_THROWS_AS((void)build_algebra({{'G', 2}}, opts), Error);
  CHECK_THROWS_AS((void)build_algebra({{'Z', 1}}), Error);
}

TEST_CASE("nilpotency of elements") {
  auto a = sl2();
  CHECK(is_nilpotent_element(a, a.basis_element(1)));       // e
  CHECK_FALSE(is_nilpotent_element(a, a.basis_element(0)));  // h
  // e + f is semisimple: char poly of ad has eigenvalue +-2
  const Element x = vec_add(a.basis_element(1), a.basis_element(2));
  CHECK_FALSE(is_nilpotent_element(a, x));
  const QVec cp = charpoly(ad_matrix(a, x));
  CHECK(cp[3] == 1);
  CHECK(cp[1] == -4);  // x^3 - 4x
  CHECK(cp[0] == 0);
}

TEST_CASE("subspace nilcone verdicts with witnesses") {
  auto a = sl2();
  auto span_e = Subspace::span_vectors({a.basis_element(1)}, a.dim);
  CHECK(subspace_in_nilcone(a, span_e).in_nilcone);
  auto span_ef = Subspace::span_vectors({a.basis_element(1), a.basis_element(2)}, a.dim);
  auto verdict = subspace_in_nilcone(a, span_ef);
  CHECK_FALSE(verdict.in_nilcone);
  CHECK_FALSE(is_nilpotent_element(a, verdict.witness));
  // e1, e2 inside sl2+sl2 are jointly nilpotent
  auto aa = build_algebra({{'A', 1}, {'A', 1}});
  auto span_e1e2 = Subspace::span_vectors({aa.basis_element(2), aa.basis_element(3)}, aa.dim);
  CHECK(subspace_in_nilcone(aa, span_e1e2).in_nilcone);
}

TEST_CASE("normalizer and subalgebra predicates on sl2") {
  auto a = sl2();
  const auto g = Subspace::full(a.dim);
  auto span_h = Subspace::span_vectors({a.basis_element(0)}, a.dim);
  auto span_e = Subspace::span_vectors({a.basis_element(1)}, a.dim);
  auto borel = Subspace::span_vectors({a.basis_element(0), a.basis_element(1)}, a.dim);
  CHECK(normalizer(a, span_e, span_h) == span_h);
  CHECK(normalizer(a, span_e, g) == borel);
  CHECK(normalizer(a, Subspace::zero(a.dim), g) == g);
  CHECK(is_subalgebra(a, borel));
  CHECK_FALSE(is_subalgebra(a, Subspace::span_vectors({a.basis_element(1), a.basis_element(2)}, a.dim)));
  CHECK(is_subalgebra(a, Subspace::zero(a.dim)));
}

TEST_CASE("orthocomplements under the invariant form") {
  auto a = sl2();
  const auto g = Subspace::full(a.dim);
  auto span_h = Subspace::span_vectors({a.basis_element(0)}, a.dim);
  auto span_ef = Subspace::span_vectors({a.basis_element(1), a.basis_element(2)}, a.dim);
  CHECK(form_orthocomplement(a, span_h, g) == span_ef);
  auto borel = Subspace::span_vectors({a.basis_element(0), a.basis_element(1)}, a.dim);
  CHECK(form_orthocomplement(a, borel, g) ==
        Subspace::span_vectors({a.basis_element(1)}, a.dim));
  CHECK(form_orthocomplement(a, g, g).dim() == 0);
}
