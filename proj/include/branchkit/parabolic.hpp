// Theta-stable parabolic subalgebras from grading elements and the derived
// constructions: sigma-openness, the maximal parabolic q' of g' with the same
// p'-part, its certification, the compact/noncompact Levi split and the
// minimal parabolic q''.
#pragma once

#include <optional>

#include "branchkit/involution.hpp"

namespace branchkit {

struct ThetaStableParabolic {
  Element grading;  // x in the Cartan with theta(x) = x
  Subspace q, l, u, qbar, ubar;
  std::size_t s_dim = 0;   // dim(u cap k)
  QVec two_rho_u;          // values of Trace ad(.)|_u on the h_i basis
  Subspace cartan_k;       // theta-fixed part of the Cartan
  QVec two_rho_u_cap_p;    // values of Trace ad(.)|_{u cap p} on cartan_k basis rows
};

ThetaStableParabolic parabolic_from_grading(const ChevalleyAlgebra& a, const SymmetricPair& pair,
                                            const Element& x);

bool is_sigma_open(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                   const SymmetricPair& pair);

struct CertifyResult {
  bool certified = false;
  Subspace nilradical;
  std::string reason;  // first failed condition when not certified
};

// The sufficiency conditions behind the parabolicity claim: s is a subalgebra,
// n := s^{perp g'} lies inside s, n is in the nilpotent cone, and [s,n] < n.
CertifyResult certify_parabolic(const ChevalleyAlgebra& a, const SymmetricPair& pair,
                                const Subspace& s, const PolyBudget& budget = {});

struct ConstructedParabolic {
  Subspace qprime;
  Subspace nilradical;  // u' = q'^{perp g'} when certified
  Subspace levi;        // l' = q' cap bar(q') when certified
  bool certified = false;
  std::string reason;
};

ConstructedParabolic construct_qprime(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                      const SymmetricPair& pair, const PolyBudget& budget = {});

struct DecompVerdict {
  bool decomposable = false;
  bool nilcone_criterion = false;      // pr(u cap p) inside the nilpotent cone
  bool qprime_criterion = false;       // q' certifies as parabolic
  bool nilcone_computed = false;       // false when the budget was exhausted
  Element witness;                     // non-nilpotent element of pr(u cap p) when false
  ConstructedParabolic qprime;
};

// Evaluates both equivalent criteria and insists they agree; disagreement is
// an internal-consistency failure (CriteriaDisagree), not a verdict.
DecompVerdict is_discretely_decomposable(const ChevalleyAlgebra& a,
                                         const ThetaStableParabolic& pb,
                                         const SymmetricPair& pair,
                                         const PolyBudget& budget = {});

struct LeviSplit {
  Subspace l_c, l_n;
  Subspace h_c;  // Cartan subalgebra of l_c
  std::vector<Subspace> simple_ideals;
  std::vector<bool> ideal_compact;
  Subspace borel_c;
  // Root system of l_c relative to the rows of h_c: functionals are value
  // vectors on that basis; root vectors are elements of the algebra.
  std::vector<QVec> roots_c;
  std::vector<Element> root_vectors_c;
  std::vector<std::size_t> positive_roots_c;  // indices into roots_c
};

LeviSplit levi_split(const ChevalleyAlgebra& a, const ConstructedParabolic& cp,
                     const SymmetricPair& pair);

// q'' = b(l'_c) + l'_n + u'; certified and checked to share the p'-part with q'.
Subspace construct_qdoubleprime(const ChevalleyAlgebra& a, const ConstructedParabolic& cp,
                                const LeviSplit& split, const SymmetricPair& pair,
                                const PolyBudget& budget = {});

// Root decomposition of a reductive subalgebra with respect to the toral
// subspace t (which must lie in the Cartan of the ambient algebra): weight
// zero part plus one entry per nonzero weight. Shared by the Levi split and
// the branching module.
struct ToralDecomposition {
  Subspace zero_part;
  std::vector<QVec> weights;          // values on the rows of t
  std::vector<Subspace> weight_spaces;
};
ToralDecomposition decompose_under_torus(const ChevalleyAlgebra& a, const Subspace& t,
                                         const Subspace& space);

}  // namespace branchkit
