// Associated-variety data: orbit-closure dimensions by generic tangent rank,
// the projection equality pr(u cap p) = u' cap p' = u'' cap p' on both the
// nilradical and its opposite, and the density comparison of k- versus
// k'-saturations.
#pragma once

#include "branchkit/parabolic.hpp"

namespace branchkit {

struct OrbitClosureData {
  Subspace generating_subspace;
  Subspace acting_subalgebra;
  std::size_t dimension = 0;
  Element witness_point;
  unsigned samples_tried = 0;
};

// Dimension of the closure of [acting, x] + s over seeded generic x in s;
// the sample schedule is deterministic in the seed and the witness records
// the maximizing point.
OrbitClosureData saturation_dimension(const ChevalleyAlgebra& a, const Subspace& acting,
                                      const Subspace& s, std::uint64_t seed);

struct ProjectionEquality {
  Subspace pr_u_p, uprime_p, udoubleprime_p;           // nilradical side
  Subspace pr_ubar_p, ubarprime_p, ubardoubleprime_p;  // opposite side
  bool equal_u = false;
  bool equal_ubar = false;
  bool all_equal() const { return equal_u && equal_ubar; }
};

ProjectionEquality projection_equality_check(const ChevalleyAlgebra& a,
                                             const ThetaStableParabolic& pb,
                                             const SymmetricPair& pair,
                                             const ConstructedParabolic& cp,
                                             const Subspace& qdoubleprime);

struct AssvarReport {
  OrbitClosureData k_saturation;        // Ad(K)(ubar cap p)
  OrbitClosureData kprime_saturation;   // Ad(K')(ubar'' cap p')
  OrbitClosureData density_side;        // Ad(K')(ubar cap p)
  ProjectionEquality projection;
  bool density_match = false;  // dim k'-saturation == dim k-saturation
};

AssvarReport assvar_report(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                           const SymmetricPair& pair, const ConstructedParabolic& cp,
                           const Subspace& qdoubleprime, std::uint64_t seed);

}  // namespace branchkit
