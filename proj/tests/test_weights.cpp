#include "doctest.h"

#include "branchkit/weights.hpp"

using namespace branchkit;

TEST_CASE("weyl dimension on A1 and A2") {
  auto a1 = build_root_datum({{'A', 1}});
  CHECK(weyl_dimension(a1, {rat(0)}) == 1);
  CHECK(weyl_dimension(a1, {rat(1)}) == 2);
  CHECK(weyl_dimension(a1, {rat(3)}) == 4);
  auto a2 = build_root_datum({{'A', 2}});
  CHECK(weyl_dimension(a2, {rat(1), rat(1)}) == 8);  // adjoint = rho
  CHECK(weyl_dimension(a2, {rat(1), rat(0)}) == 3);
  CHECK_THROWS_AS((void)weyl_dimension(a2, {rat(-1), rat(0)}), Error);
}

TEST_CASE("freudenthal characters for small cases") {
  auto a1 = build_root_datum({{'A', 1}});
  auto c = freudenthal_character(a1, {rat(2)});
  CHECK(c.entries.size() == 3);
  CHECK(c.mult({rat(2)}) == 1);
  CHECK(c.mult({rat(0)}) == 1);
  CHECK(c.mult({rat(-2)}) == 1);
  auto a2 = build_root_datum({{'A', 2}});
  auto adj = freudenthal_character(a2, {rat(1), rat(1)});
  CHECK(adj.mass() == 8);
  CHECK(adj.mult({rat(0), rat(0)}) == 2);  // Cartan of sl3
  auto triv = freudenthal_character(a2, {rat(0), rat(0)});
  CHECK(triv.mass() == 1);
}

TEST_CASE("freudenthal mass equals weyl dimension across rank <= 2 samples") {
  for (auto spec : std::vector<std::vector<SimpleFactor>>{
           {{'A', 2}}, {{'B', 2}}, {{'G', 2}}, {{'A', 1}, {'A', 1}}}) {
    auto rd = build_root_datum(spec);
    for (long c0 = 0; c0 <= 2; ++c0)
      for (long c1 = 0; c1 <= 2; ++c1) {
        QVec lam{rat(c0), rat(c1)};
        CHECK(freudenthal_character(rd, lam).mass() == weyl_dimension(rd, lam));
      }
  }
}

TEST_CASE("weyl invariance of characters under simple reflections") {
  auto rd = build_root_datum({{'B', 2}});
  auto ws = weight_system_of(rd);
  auto c = freudenthal_character(rd, {rat(1), rat(2)});
  for (std::size_t s : ws.simple_indices) {
    const QVec& alpha = ws.positive_roots[s];
    for (const auto& [w, m] : c.entries) {
      const QVec refl = vec_sub(w, vec_scale(alpha, ws.pair_coroot(w, alpha)));
      CHECK(c.mult(refl) == m);
    }
  }
}

TEST_CASE("symmetric power characters") {
  WeightCharacter c;
  SUBCASE("p = 0 is the trivial character") {
    c.add({rat(5)}, 1);
    auto s = symmetric_power_character(c, 0);
    CHECK(s.mass() == 1);
    CHECK(s.mult({rat(0)}) == 1);
  }
  SUBCASE("one-dimensional input") {
    c.add({rat(2)}, 1);
    auto s = symmetric_power_character(c, 3);
    CHECK(s.mass() == 1);
    CHECK(s.mult({rat(6)}) == 1);
  }
  SUBCASE("two lines of weight +-2: monomials e^2, ef, f^2") {
    c.add({rat(2)}, 1);
    c.add({rat(-2)}, 1);
    auto s = symmetric_power_character(c, 2);
    CHECK(s.mult({rat(4)}) == 1);
    CHECK(s.mult({rat(0)}) == 1);
    CHECK(s.mult({rat(-4)}) == 1);
    CHECK(s.mass() == 3);
  }
  SUBCASE("mass identity against the multiset formula") {
    // S^p of a 3-dim space has dim C(p+2,2)
    c.add({rat(2), rat(0)}, 1);
    c.add({rat(0), rat(1)}, 1);
    c.add({rat(-2), rat(3)}, 1);
    for (unsigned p = 0; p <= 5; ++p) {
      auto s = symmetric_power_character(c, p);
      CHECK(s.mass() == static_cast<long>((p + 1) * (p + 2) / 2));
    }
  }
}

TEST_CASE("brute-force monomial oracle for symmetric powers") {
  // independent oracle: enumerate monomials of a small multiset directly
  WeightCharacter c;
  c.add({rat(1)}, 2);   // two copies of weight 1
  c.add({rat(-1)}, 1);  // one of weight -1
  for (unsigned p = 1; p <= 4; ++p) {
    auto s = symmetric_power_character(c, p);
    WeightCharacter oracle;
    // monomials x^a y^b z^c with a+b+c = p over weights (1, 1, -1)
    for (unsigned x = 0; x <= p; ++x)
      for (unsigned y = 0; x + y <= p; ++y) {
        const unsigned z = p - x - y;
        oracle.add({rat(static_cast<long>(x) + y - static_cast<long>(z))}, 1);
      }
    CHECK(s == oracle);
  }
}

TEST_CASE("tensor characters") {
  WeightCharacter c2;
  c2.add({rat(1)}, 1);
  c2.add({rat(-1)}, 1);
  auto t = tensor_character(c2, c2);
  CHECK(t.mult({rat(2)}) == 1);
  CHECK(t.mult({rat(0)}) == 2);
  CHECK(t.mult({rat(-2)}) == 1);
  WeightCharacter triv = WeightCharacter::line({rat(0)});
  CHECK(tensor_character(c2, triv) == c2);
  auto a2 = build_root_datum({{'A', 2}});
  auto adj = freudenthal_character(a2, {rat(1), rat(1)});
  CHECK(tensor_character(adj, adj).mass() == 64);
}

TEST_CASE("to_dominant walks into the chamber with the right sign") {
  auto rd = build_root_datum({{'A', 2}});
  auto ws = weight_system_of(rd);
  auto r = to_dominant(ws, {rat(-1), rat(3)});
  CHECK(ws.is_dominant(r.weight));
  CHECK(r.moved);
  // singular case: on a wall after shifting
  auto wall = to_dominant(ws, {rat(0), rat(2)});
  CHECK_FALSE(wall.regular);
  auto inside = to_dominant(ws, {rat(1), rat(1)});
  CHECK(inside.det == 1);
  CHECK_FALSE(inside.moved);
}

TEST_CASE("top exterior weight of graded pieces") {
  auto a = build_algebra({{'A', 1}});
  auto cartan = a.cartan_subspace();
  auto span_e = Subspace::span_vectors({a.basis_element(1)}, a.dim);
  CHECK(top_exterior_weight(a, span_e, cartan) == QVec{rat(2)});
  CHECK(top_exterior_weight(a, Subspace::zero(a.dim), cartan) == QVec{rat(0)});
  auto not_stable = Subspace::span_vectors({vec_add(a.basis_element(0), a.basis_element(1))}, 3);
  CHECK_THROWS_AS((void)top_exterior_weight(a, not_stable, cartan), Error);
}
