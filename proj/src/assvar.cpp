#include "branchkit/assvar.hpp"

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

// splitmix64; the sample schedule must be reproducible across platforms.
std::uint64_t next_state(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

OrbitClosureData saturation_dimension(const ChevalleyAlgebra& a, const Subspace& acting,
                                      const Subspace& s, std::uint64_t seed) {
  if (!is_subalgebra(a, acting))
    fail(ErrorKind::NotSubalgebra, "acting subspace is not a subalgebra");
  OrbitClosureData out;
  out.generating_subspace = s;
  out.acting_subalgebra = acting;
  out.dimension = s.dim();
  out.witness_point = a.zero();
  if (s.dim() == 0) return out;

  std::uint64_t state = seed;
  const unsigned schedule = 8;
  for (unsigned trial = 0; trial < schedule; ++trial) {
    Element x = a.zero();
    if (trial == 0) {
      // sum of the basis first; it is often already generic
      for (std::size_t i = 0; i < s.dim(); ++i) x = vec_add(x, s.basis_vector(i));
    } else {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        const long c = static_cast<long>(next_state(state) % 17) - 8;
        if (c != 0) x = vec_add(x, vec_scale(s.basis_vector(i), rat(c)));
      }
    }
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < acting.dim(); ++i)
      rows.push_back(bracket(a, acting.basis_vector(i), x));
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_vector(i));
    const std::size_t d = Subspace::span_vectors(rows, a.dim).dim();
    ++out.samples_tried;
    if (d > out.dimension) {
      out.dimension = d;
      out.witness_point = x;
    }
  }
  return out;
}

ProjectionEquality projection_equality_check(const ChevalleyAlgebra& a,
                                             const ThetaStableParabolic& pb,
                                             const SymmetricPair& pair,
                                             const ConstructedParabolic& cp,
                                             const Subspace& qdoubleprime) {
  if (!cp.certified)
    fail(ErrorKind::HypothesisViolated, "projection equality needs a certified instance");
  ProjectionEquality pe;
  const Subspace upp = form_orthocomplement(a, qdoubleprime, pair.gprime);
  pe.pr_u_p = project(a, pair, pb.u.intersect(pair.p));
  pe.uprime_p = cp.nilradical.intersect(pair.pprime);
  pe.udoubleprime_p = upp.intersect(pair.pprime);
  pe.equal_u = pe.pr_u_p == pe.uprime_p && pe.uprime_p == pe.udoubleprime_p;

  const Subspace ubar_prime = apply_linear_map(pair.bar_matrix, cp.nilradical);
  const Subspace ubar_pp = apply_linear_map(pair.bar_matrix, upp);
  pe.pr_ubar_p = project(a, pair, pb.ubar.intersect(pair.p));
  pe.ubarprime_p = ubar_prime.intersect(pair.pprime);
  pe.ubardoubleprime_p = ubar_pp.intersect(pair.pprime);
  pe.equal_ubar = pe.pr_ubar_p == pe.ubarprime_p && pe.ubarprime_p == pe.ubardoubleprime_p;
  return pe;
}

AssvarReport assvar_report(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                           const SymmetricPair& pair, const ConstructedParabolic& cp,
                           const Subspace& qdoubleprime, std::uint64_t seed) {
  AssvarReport rep;
  rep.projection = projection_equality_check(a, pb, pair, cp, qdoubleprime);
  const Subspace ubar_p = pb.ubar.intersect(pair.p);
  const Subspace ubar_pp =
      apply_linear_map(pair.bar_matrix, form_orthocomplement(a, qdoubleprime, pair.gprime))
          .intersect(pair.pprime);
  rep.k_saturation = saturation_dimension(a, pair.k, ubar_p, seed);
  rep.kprime_saturation = saturation_dimension(a, pair.kprime, ubar_pp, seed);
  rep.density_side = saturation_dimension(a, pair.kprime, ubar_p, seed);
  rep.density_match = rep.density_side.dimension == rep.k_saturation.dimension;
  return rep;
}

}  // namespace branchkit
