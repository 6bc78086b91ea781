// The branching upper-bound pipeline: the parameter lambda and its range
// flags, the quotient module g/(qbar + g'), equivariant-Hom multiplicities
// with the Euler-characteristic cross-check, the resulting table, and the
// theta = sigma weight-multiplicity bound.
#pragma once

#include "branchkit/modules.hpp"

namespace branchkit {

struct LambdaParam {
  Subspace z_l;        // center of the Levi of q, inside the Cartan
  QVec lambda;         // input coordinates over the rows of z_l
  QVec lambda_tilde;   // extension to the Cartan by zero on [l,l]; weight coords
  bool linear = false;
  bool unitary_shadow = false;
  bool weakly_fair = false;
  bool good = false;
  Rat weakly_fair_min;      // min <lambda + rho(u), alpha> over u-roots
  QVec weakly_fair_argmin;  // achieving root, weight coords
  Rat good_min;             // min <lambda + rho(n), alpha> over u-roots
  QVec good_argmin;
};

LambdaParam check_lambda(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                         const SymmetricPair& pair, const QVec& lambda_coords);

struct BranchSpace {
  std::vector<std::size_t> lifted;  // ambient basis indices of the canonical complement
  Subspace qbar_plus_gprime;
  Subspace acting;                  // qbar cap g'
  std::vector<QMat> levi_action;    // quotient action per acting basis row
  QVec top_on_acting;               // trace functional: action on the top exterior power
  QMat to_weight_basis;             // columns: h_c weight vectors in quotient coordinates
  QMat from_weight_basis;
  std::vector<QVec> quotient_weights;  // per weight column, values on h_c rows
};

BranchSpace build_branch_space(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                               const SymmetricPair& pair, const LeviSplit& split);

// All data the multiplicity solvers share for one instance.
struct BranchProblem {
  const ChevalleyAlgebra* a = nullptr;
  const ThetaStableParabolic* pb = nullptr;
  const SymmetricPair* pair = nullptr;
  const LeviSplit* split = nullptr;
  const ConstructedParabolic* cp = nullptr;
  BranchSpace bs;
  LambdaParam lam;
  TriangularContext levi_ctx;
  Subspace hom_domain;  // qbar cap l'
  QVec scalar_shift;    // (lambda + top) evaluated on the rows of h_c
};

BranchProblem prepare_branch_problem(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                     const SymmetricPair& pair, const ConstructedParabolic& cp,
                                     const LeviSplit& split, const LambdaParam& lam);

// Degree-p machinery: monomial basis of S^p over the weight-adapted quotient.
struct DegreeData {
  unsigned p = 0;
  std::vector<std::vector<unsigned>> monomials;
  std::vector<QVec> weights;  // per monomial, values on h_c rows, shift included
};
DegreeData degree_data(const BranchProblem& bp, unsigned p);

// Dominant integral h_c-weights of C_lambda x top x S^p; superset of the
// support of the multiplicity table at degree p.
std::vector<QVec> enumerate_lambda_candidates(const BranchProblem& bp, const DegreeData& dd);

long multiplicity_hom(const BranchProblem& bp, const DegreeData& dd, const QVec& lambda_prime,
                      const ModuleBudget& budget = {});

struct EulerCell {
  long value = 0;
  bool sign_mixing = false;  // some contribution needed a nonidentity Weyl element
};
std::map<QVec, EulerCell> multiplicity_euler(const BranchProblem& bp, const DegreeData& dd);

struct BranchEntry {
  unsigned p = 0;
  QVec lambda_prime;  // values on the rows of h_c
  long multiplicity = 0;
  std::string method;  // "hom" or "hom+euler"
  bool weakly_fair_for_qdoubleprime = false;
};

struct MultiplicityTable {
  unsigned max_p = 0;
  std::vector<BranchEntry> entries;               // sorted by (p, lambda')
  std::vector<std::pair<unsigned, QVec>> mixing;  // cells where the Euler method is not trusted
};

struct BranchOptions {
  bool override_weakly_fair = false;
  ModuleBudget module_budget;
};

MultiplicityTable branch_table(const BranchProblem& bp, const Subspace& qdoubleprime, unsigned max_p,
                               const BranchOptions& opts = {});

// Weight multiplicity of mu in C_{lambda + 2 rho(u cap p)} x S^p(u cap p),
// for instances whose full Cartan lies in k. mu in weight coordinates.
long blattner_bound(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                    const SymmetricPair& pair, const LambdaParam& lam, const QVec& mu, unsigned p);

// The full weight character of that tensor product at degree p.
WeightCharacter blattner_character(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                   const SymmetricPair& pair, const LambdaParam& lam, unsigned p);

// Chosen positive system of Delta(k, t) inside Delta(q cap k, t): roots of k
// graded positively by x, zero-grade ties broken toward positive g-roots.
// Returned in weight coordinates. Requires the full Cartan inside k.
std::vector<QVec> blattner_positive_system(const ChevalleyAlgebra& a,
                                           const ThetaStableParabolic& pb,
                                           const SymmetricPair& pair);

// mu dominance test for that system.
bool blattner_dominant(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                       const SymmetricPair& pair, const QVec& mu);

}  // namespace branchkit
