// Weight multiset machinery: characters as exact finite maps, the Freudenthal
// multiplicity recursion, the Weyl dimension formula, symmetric-power and
// tensor characters. Everything is parametrized by a WeightSystem so the same
// code serves the full algebra, the compact subalgebra k, and the Levi factor
// l'_c whose weights live on a sub-Cartan basis.
#pragma once

#include <map>

#include "branchkit/chevalley.hpp"

namespace branchkit {

using Weight = QVec;

struct WeightCharacter {
  std::map<Weight, long> entries;  // multiplicity >= 1, zeros never stored

  void add(const Weight& w, long m);
  long mult(const Weight& w) const;
  long mass() const;
  bool operator==(const WeightCharacter& o) const { return entries == o.entries; }

  static WeightCharacter line(const Weight& w) {
    WeightCharacter c;
    c.add(w, 1);
    return c;
  }
};

WeightCharacter tensor_character(const WeightCharacter& c1, const WeightCharacter& c2);

// Character of S^p via the power-sum recursion
// p h_p = sum_{k=1..p} psi_k h_{p-k}, psi_k(w) = sum_mu mult(mu) [k mu].
WeightCharacter symmetric_power_character(const WeightCharacter& c, unsigned p);

// A positive system with an invariant form, over arbitrary rational
// coordinates for weights.
struct WeightSystem {
  std::vector<QVec> positive_roots;
  QMat gram;  // invariant form on the weight coordinate space
  std::vector<std::size_t> simple_indices;
  QVec rho;

  Rat form(const QVec& a, const QVec& b) const;
  Rat pair_coroot(const QVec& mu, const QVec& root) const;  // 2(mu,root)/(root,root)
  bool is_dominant(const QVec& mu) const;   // on simple roots
  bool is_integral(const QVec& mu) const;   // on simple coroots
  std::size_t coord_dim() const { return gram.rows; }
};

WeightSystem weight_system_from_roots(const std::vector<QVec>& positive_roots, const QMat& gram);
WeightSystem weight_system_of(const RootDatum& rd);

long weyl_dimension(const WeightSystem& ws, const QVec& lambda);
long weyl_dimension(const RootDatum& rd, const QVec& lambda);

WeightCharacter freudenthal_character(const WeightSystem& ws, const QVec& lambda);
WeightCharacter freudenthal_character(const RootDatum& rd, const QVec& lambda);

struct DominantConjugate {
  QVec weight;
  int det = 1;          // sign of the Weyl element used
  bool regular = true;  // false when the input sits on a wall
  bool moved = false;   // true when a nonidentity element was needed
};
// rho-unshifted chamber walk by simple reflections.
DominantConjugate to_dominant(const WeightSystem& ws, const QVec& v);

// Sum of the ad-weights of `s` under the toral subspace `cartan` (rows of the
// returned vector match the rows of `cartan`). Throws NotStable if s is not
// ad(cartan)-stable.
QVec top_exterior_weight(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& cartan);

}  // namespace branchkit
