#include "doctest.h"

#include "branchkit/chevalley.hpp"

using namespace branchkit;

namespace {

// deterministic small-rational stream for property instances
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  Rat small() { return rat(static_cast<long>(next() % 9) - 4); }
  QVec vec(std::size_t n) {
    QVec v(n);
    for (auto& x : v) x = small();
    return v;
  }
};

}  // namespace

TEST_CASE("modular law dim(s1+s2) + dim(s1 cap s2) = dim s1 + dim s2") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<QVec> r1, r2;
    for (std::size_t i = 0; i < 1 + rng.next() % n; ++i) r1.push_back(rng.vec(n));
    for (std::size_t i = 0; i < 1 + rng.next() % n; ++i) r2.push_back(rng.vec(n));
    auto s1 = Subspace::span_vectors(r1, n);
    auto s2 = Subspace::span_vectors(r2, n);
    CHECK(s1.sum(s2).dim() + s1.intersect(s2).dim() == s1.dim() + s2.dim());
    CHECK(s1.sum(s2).contains(s1));
    CHECK(s1.contains(s1.intersect(s2)));
  }
}

// The projection identity (W cap X)^{perp X} = p(W^{perp V}) for
// V = X + X^{perp V}, with p the projection onto X along X^{perp V}.
TEST_CASE("projection identity on 200 seeded instances") {
  Rng rng(2026);
  int done = 0;
  while (done < 200) {
    const std::size_t n = 2 + rng.next() % 7;  // ambient <= 8
    // random symmetric nondegenerate form
    QMat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        gram.at(i, j) = rng.small();
        gram.at(j, i) = gram.at(i, j);
      }
    if (rank(gram) != n) continue;
    // random X with the form nondegenerate on X
    std::vector<QVec> xr;
    for (std::size_t i = 0; i < 1 + rng.next() % (n - 1); ++i) xr.push_back(rng.vec(n));
    auto X = Subspace::span(QMat::from_rows(xr), n);
    if (X.dim() == 0) continue;
    QMat xgram(X.dim(), X.dim());
    for (std::size_t i = 0; i < X.dim(); ++i)
      for (std::size_t j = 0; j < X.dim(); ++j)
        xgram.at(i, j) = dot(X.basis_vector(i), mat_apply(gram, X.basis_vector(j)));
    if (rank(xgram) != X.dim()) continue;
    auto V = Subspace::full(n);
    auto Xperp = orthocomplement(gram, X, V);
    if (X.sum(Xperp).dim() != n) continue;  // guaranteed by nondegeneracy, kept as a guard
    std::vector<QVec> wr;
    for (std::size_t i = 0; i < 1 + rng.next() % n; ++i) wr.push_back(rng.vec(n));
    auto W = Subspace::span(QMat::from_rows(wr), n);

    // p: V -> X along X^{perp V}
    QMat cols(n, n);
    for (std::size_t j = 0; j < X.dim(); ++j)
      for (std::size_t r = 0; r < n; ++r) cols.at(r, j) = X.basis_vector(j)[r];
    for (std::size_t j = 0; j < Xperp.dim(); ++j)
      for (std::size_t r = 0; r < n; ++r) cols.at(r, X.dim() + j) = Xperp.basis_vector(j)[r];
    auto project_to_x = [&](const QVec& v) {
      bool ok = false;
      const QVec co = solve(cols, v, ok);
      REQUIRE(ok);
      QVec out(n, Rat(0));
      for (std::size_t j = 0; j < X.dim(); ++j)
        if (co[j] != 0) out = vec_add(out, vec_scale(X.basis_vector(j), co[j]));
      return out;
    };

    auto lhs = orthocomplement(gram, W.intersect(X), X);
    auto wperp = orthocomplement(gram, W, V);
    std::vector<QVec> proj_rows;
    for (std::size_t i = 0; i < wperp.dim(); ++i)
      proj_rows.push_back(project_to_x(wperp.basis_vector(i)));
    auto rhs = Subspace::span_vectors(proj_rows, n);
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("nilcone verdict agrees with sampled elements on small subspaces") {
  auto a = build_algebra({{'B', 2}});
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<QVec> rows;
    for (int i = 0; i < 2; ++i) {
      Element x = a.zero();
      // random combinations of root vectors only (avoid trivial Cartan picks)
      for (std::size_t b = a.rank; b < a.dim; ++b)
        if (rng.next() % 4 == 0) x = vec_add(x, vec_scale(a.basis_element(b), rng.small()));
      rows.push_back(x);
    }
    auto s = Subspace::span_vectors(rows, a.dim);
    if (s.dim() == 0 || s.dim() > 2) continue;
    const auto verdict = subspace_in_nilcone(a, s);
    // sample grid agreement
    bool all_nilpotent = true;
    for (long c1 = -2; c1 <= 2 && all_nilpotent; ++c1)
      for (long c2 = -2; c2 <= 2 && all_nilpotent; ++c2) {
        Element x = a.zero();
        if (s.dim() >= 1) x = vec_add(x, vec_scale(s.basis_vector(0), rat(c1)));
        if (s.dim() >= 2) x = vec_add(x, vec_scale(s.basis_vector(1), rat(c2)));
        if (!is_nilpotent_element(a, x)) all_nilpotent = false;
      }
    if (verdict.in_nilcone) {
      CHECK(all_nilpotent);
    } else {
      CHECK_FALSE(is_nilpotent_element(a, verdict.witness));
    }
  }
}

TEST_CASE("nilcone budget guard raises") {
  auto a = build_algebra({{'B', 2}});
  std::vector<QVec> rows;
  for (std::size_t b = a.rank; b < a.dim; ++b) rows.push_back(a.basis_element(b));
  auto s = Subspace::span_vectors(rows, a.dim);
  PolyBudget tiny;
  tiny.max_terms = 3;
  CHECK_THROWS_AS((void)subspace_in_nilcone(a, s, tiny), Error);
}

TEST_CASE("apply_linear_map basics") {
  auto a = build_algebra({{'A', 1}});
  auto s = Subspace::span_vectors({vec_add(a.basis_element(0), a.basis_element(1))}, 3);
  CHECK(apply_linear_map(QMat::identity(3), s) == s);
  CHECK(apply_linear_map(QMat(3, 3), s).dim() == 0);
  // coordinate projection onto span{h}
  QMat proj(3, 3);
  proj.at(0, 0) = 1;
  CHECK(apply_linear_map(proj, s) == Subspace::span_vectors({a.basis_element(0)}, 3));
}

TEST_CASE("form scaling changes no verdict") {
  // the orthocomplement under c*K equals the orthocomplement under K
  auto a = build_algebra({{'A', 2}});
  const QMat scaled = mat_scale(a.killing, rat(7, 3));
  auto g = Subspace::full(a.dim);
  auto s = Subspace::span_vectors({a.basis_element(0), a.basis_element(3)}, a.dim);
  CHECK(orthocomplement(a.killing, s, g) == orthocomplement(scaled, s, g));
}
