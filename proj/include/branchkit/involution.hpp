// Involutive automorphisms acting on the fixed Chevalley basis, and the
// symmetric pair decomposition they induce. Only involutions stabilizing the
// Cartan subalgebra are representable: a signed permutation of the roots plus
// a rational Cartan action, or a raw matrix that passes validation.
#pragma once

#include "branchkit/chevalley.hpp"

namespace branchkit {

struct LieInvolution {
  QMat matrix;  // dim x dim, validated involutive automorphism
};

// Full validation: square = identity, automorphism on all basis pairs,
// invariant-form preservation. Throws NotInvolutive / NotAutomorphism with the
// violated pair in the message.
LieInvolution involution_from_matrix(const ChevalleyAlgebra& a, const QMat& m);

// e_alpha -> signs[alpha] e_{root_map(alpha)} with the given Cartan action.
// root_map is 1-based and signed over positive roots (empty = identity);
// signs are per positive root (signs on negative roots are forced equal);
// cartan_action columns give images of the h_i (empty = identity).
LieInvolution involution_from_signs(const ChevalleyAlgebra& a, const std::vector<long>& root_map,
                                    const QMat& cartan_action, const std::vector<int>& signs);

// sign(alpha) = prod simple_signs[i]^{c_i}; identity root map and Cartan action.
LieInvolution sign_involution(const ChevalleyAlgebra& a, const std::vector<int>& simple_signs);

LieInvolution identity_involution(const ChevalleyAlgebra& a);

// Swap of two equal simple factors, all signs +1.
LieInvolution swap_involution(const ChevalleyAlgebra& a, std::size_t factor1, std::size_t factor2);

// Chevalley involution: h -> -h, e_alpha -> -e_{-alpha}. Not an input
// involution; composed with theta it models the bar conjugation.
QMat chevalley_involution_matrix(const ChevalleyAlgebra& a);

struct SymmetricPair {
  LieInvolution theta;
  LieInvolution sigma;
  Subspace k, p, gprime, kprime, pprime, g_minus_sigma;
  QMat pr_matrix;   // (1 + sigma)/2, projection onto g' along g^{-sigma}
  QMat bar_matrix;  // beta = theta o omega, models the real-form conjugation
};

// Eigenspace decompositions for commuting validated involutions, with all
// SymmetricPair invariants checked (throws NonCommuting or NotAutomorphism).
SymmetricPair derive_pair(const ChevalleyAlgebra& a, const LieInvolution& theta,
                          const LieInvolution& sigma);

Subspace project(const ChevalleyAlgebra& a, const SymmetricPair& pair, const Subspace& s);

}  // namespace branchkit
