// Chevalley basis construction from root data. Basis order: Cartan elements
// h_1..h_r (simple coroots), then e_alpha over positive roots in (height, lex)
// order, then the mirrored f_alpha. Structure constant signs are fixed by the
// extraspecial-pair convention: N(eps, eta) = p+1 > 0 on each extraspecial
// pair, N(-a,-b) = -N(a,b), everything else forced by the Jacobi identity.
#pragma once

#include <string>
#include <vector>

#include "branchkit/poly.hpp"
#include "branchkit/rootdata.hpp"
#include "branchkit/subspace.hpp"

namespace branchkit {

using Element = QVec;  // coordinates over the Chevalley basis

struct ChevalleyAlgebra {
  RootDatum rd;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t npos = 0;
  std::vector<std::string> basis_labels;
  std::string sign_convention;  // recorded with serialized output

  // brackets[i][j] for i < j, sparse (k, coeff); antisymmetry fills the rest
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> brackets;
  std::vector<QMat> ad_basis;  // ad of each basis element
  QMat killing;                // adjoint trace form

  std::size_t h_index(std::size_t i) const { return i; }
  std::size_t e_index(std::size_t p) const { return rank + p; }
  std::size_t f_index(std::size_t p) const { return rank + npos + p; }

  Element basis_element(std::size_t i) const;
  Element zero() const { return Element(dim, Rat(0)); }

  // Cartan-subalgebra membership and the h-part of the basis split.
  bool in_cartan(const Element& x) const;
  Subspace cartan_subspace() const;
};

struct BuildOptions {
  std::size_t dim_bound = 100;
  bool validate = true;  // antisymmetry, Jacobi, invariance, root action
};

ChevalleyAlgebra build_algebra(const std::vector<SimpleFactor>& spec,
                               const BuildOptions& opts = {});

Element bracket(const ChevalleyAlgebra& a, const Element& x, const Element& y);
Rat invariant_form(const ChevalleyAlgebra& a, const Element& x, const Element& y);
QMat ad_matrix(const ChevalleyAlgebra& a, const Element& x);

// Exhaustive structural checks; throws on violation. Cheap for dim <= 80.
void validate_structure(const ChevalleyAlgebra& a);

bool is_subalgebra(const ChevalleyAlgebra& a, const Subspace& s);

// {x in within : [x, s] subset s}
Subspace normalizer(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& within);

// Orthocomplement of s inside within under the invariant form.
Subspace form_orthocomplement(const ChevalleyAlgebra& a, const Subspace& s,
                              const Subspace& within);

bool is_nilpotent_element(const ChevalleyAlgebra& a, const Element& x);

struct NilconeVerdict {
  bool in_nilcone = false;
  Element witness;  // a non-nilpotent member when in_nilcone is false
};

// Symbolic test: char poly of the generic element ad(sum t_i b_i) must be x^n.
NilconeVerdict subspace_in_nilcone(const ChevalleyAlgebra& a, const Subspace& s,
                                   const PolyBudget& budget = {});

// Span of [x, y] for x in s1, y in s2 (basis pairs).
Subspace bracket_span(const ChevalleyAlgebra& a, const Subspace& s1, const Subspace& s2);

// Centralizer {x in within : [x, s] = 0}.
Subspace centralizer(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& within);

}  // namespace branchkit
