#include "branchkit/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "branchkit/errors.hpp"

namespace branchkit {

ThetaStableParabolic parabolic_from_grading(const ChevalleyAlgebra& a, const SymmetricPair& pair,
                                            const Element& x) {
  if (x.size() != a.dim) fail(ErrorKind::DimensionMismatch, "grading element length");
  if (!a.in_cartan(x)) fail(ErrorKind::NotInCartan, "grading element is not in the Cartan");
  if (mat_apply(pair.theta.matrix, x) != x)
    fail(ErrorKind::NotThetaFixed, "grading element is not theta-fixed");

  ThetaStableParabolic pb;
  pb.grading = x;
  const QVec xh(x.begin(), x.begin() + a.rank);

  std::vector<QVec> q_rows, l_rows, u_rows, qb_rows, ub_rows;
  for (std::size_t i = 0; i < a.rank; ++i) {
    q_rows.push_back(a.basis_element(i));
    l_rows.push_back(a.basis_element(i));
    qb_rows.push_back(a.basis_element(i));
  }
  for (std::size_t p = 0; p < a.npos; ++p) {
    const Rat val = dot(a.rd.pos_weight[p], xh);
    const Element e = a.basis_element(a.e_index(p));
    const Element f = a.basis_element(a.f_index(p));
    if (val == 0) {
      l_rows.push_back(e);
      l_rows.push_back(f);
      q_rows.push_back(e);
      q_rows.push_back(f);
      qb_rows.push_back(e);
      qb_rows.push_back(f);
    } else if (val > 0) {
      q_rows.push_back(e);
      u_rows.push_back(e);
      qb_rows.push_back(f);
      ub_rows.push_back(f);
    } else {
      q_rows.push_back(f);
      u_rows.push_back(f);
      qb_rows.push_back(e);
      ub_rows.push_back(e);
    }
  }
  pb.q = Subspace::span_vectors(q_rows, a.dim);
  pb.l = Subspace::span_vectors(l_rows, a.dim);
  pb.u = Subspace::span_vectors(u_rows, a.dim);
  pb.qbar = Subspace::span_vectors(qb_rows, a.dim);
  pb.ubar = Subspace::span_vectors(ub_rows, a.dim);

  if (apply_linear_map(pair.theta.matrix, pb.q) != pb.q)
    fail(ErrorKind::NotThetaFixed, "q is not theta-stable");
  if (pb.q.intersect(pb.qbar) != pb.l)
    fail(ErrorKind::CertificationFailed, "q cap qbar is not the Levi");
  // The composite theta . (Chevalley involution) must carry q to the opposite
  // parabolic; downstream Levi computations rely on it.
  if (apply_linear_map(pair.bar_matrix, pb.q) != pb.qbar)
    fail(ErrorKind::NotThetaFixed, "bar conjugation does not map q to qbar");

  pb.s_dim = pb.u.intersect(pair.k).dim();

  pb.two_rho_u = QVec(a.rank, Rat(0));
  for (std::size_t p = 0; p < a.npos; ++p) {
    const Rat val = dot(a.rd.pos_weight[p], xh);
    if (val > 0)
      pb.two_rho_u = vec_add(pb.two_rho_u, a.rd.pos_weight[p]);
    else if (val < 0)
      pb.two_rho_u = vec_sub(pb.two_rho_u, a.rd.pos_weight[p]);
  }

  pb.cartan_k = a.cartan_subspace().intersect(pair.k);
  const Subspace up = pb.u.intersect(pair.p);
  pb.two_rho_u_cap_p = QVec(pb.cartan_k.dim(), Rat(0));
  for (std::size_t b = 0; b < pb.cartan_k.dim(); ++b) {
    Rat tr(0);
    for (std::size_t j = 0; j < up.dim(); ++j) {
      const Element br = bracket(a, pb.cartan_k.basis_vector(b), up.basis_vector(j));
      if (!up.contains(br)) fail(ErrorKind::NotStable, "u cap p is not cartan_k-stable");
      tr += up.coordinates(br)[j];
    }
    pb.two_rho_u_cap_p[b] = tr;
  }
  return pb;
}

bool is_sigma_open(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                   const SymmetricPair& pair) {
  (void)a;
  return pb.q.intersect(pair.k).sum(pair.kprime).dim() == pair.k.dim();
}

CertifyResult certify_parabolic(const ChevalleyAlgebra& a, const SymmetricPair& pair,
                                const Subspace& s, const PolyBudget& budget) {
  if (!pair.gprime.contains(s)) fail(ErrorKind::NotContained, "candidate is not inside g'");
  CertifyResult res;
  if (!is_subalgebra(a, s)) {
    res.reason = "not a subalgebra";
    return res;
  }
  const Subspace n = form_orthocomplement(a, s, pair.gprime);
  res.nilradical = n;
  if (!s.contains(n)) {
    res.reason = "orthocomplement escapes the candidate";
    return res;
  }
  const NilconeVerdict nil = subspace_in_nilcone(a, n, budget);
  if (!nil.in_nilcone) {
    res.reason = "orthocomplement is not nilpotent";
    return res;
  }
  if (!n.contains(bracket_span(a, s, n))) {
    res.reason = "orthocomplement is not an ideal";
    return res;
  }
  res.certified = true;
  return res;
}

ConstructedParabolic construct_qprime(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                      const SymmetricPair& pair, const PolyBudget& budget) {
  ConstructedParabolic cp;
  const Subspace qpp = pb.q.intersect(pair.pprime);
  cp.qprime = normalizer(a, qpp, pair.kprime).sum(qpp);
  CertifyResult cert = certify_parabolic(a, pair, cp.qprime, budget);
  cp.certified = cert.certified;
  cp.reason = cert.reason;
  if (cp.certified) {
    cp.nilradical = cert.nilradical;
    cp.levi = cp.qprime.intersect(apply_linear_map(pair.bar_matrix, cp.qprime));
  }
  return cp;
}

DecompVerdict is_discretely_decomposable(const ChevalleyAlgebra& a,
                                         const ThetaStableParabolic& pb,
                                         const SymmetricPair& pair, const PolyBudget& budget) {
  if (!is_sigma_open(a, pb, pair))
    fail(ErrorKind::HypothesisViolated, "q is not sigma-open");
  DecompVerdict v;
  v.qprime = construct_qprime(a, pb, pair, budget);
  v.qprime_criterion = v.qprime.certified;
  const Subspace pr_up = project(a, pair, pb.u.intersect(pair.p));
  try {
    const NilconeVerdict nil = subspace_in_nilcone(a, pr_up, budget);
    v.nilcone_computed = true;
    v.nilcone_criterion = nil.in_nilcone;
    if (!nil.in_nilcone) v.witness = nil.witness;
  } catch (const Error& e) {
    if (e.kind != ErrorKind::BudgetExceeded) throw;
    v.nilcone_computed = false;
  }
  if (v.nilcone_computed && v.nilcone_criterion != v.qprime_criterion)
    fail(ErrorKind::CriteriaDisagree,
         "nilpotent-cone and parabolicity criteria disagree on this instance");
  v.decomposable = v.nilcone_computed ? v.nilcone_criterion : v.qprime_criterion;
  return v;
}

ToralDecomposition decompose_under_torus(const ChevalleyAlgebra& a, const Subspace& t,
                                         const Subspace& space) {
  ToralDecomposition out;
  out.zero_part = centralizer(a, t, space);
  if (t.dim() == 0) {
    out.zero_part = space;
    return out;
  }
  // Candidate weight tuples come from the ambient roots: every vector of an
  // ad(t)-stable space with t inside the Cartan decomposes into root vectors.
  for (std::size_t b = 0; b < t.dim(); ++b)
    if (!a.in_cartan(t.basis_vector(b)))
      fail(ErrorKind::NotInCartan, "torus is not inside the Cartan");
  std::vector<QVec> candidates;
  for (std::size_t p = 0; p < a.npos; ++p) {
    for (int sign : {+1, -1}) {
      QVec w(t.dim(), Rat(0));
      bool zero = true;
      for (std::size_t b = 0; b < t.dim(); ++b) {
        const QVec tb = t.basis_vector(b);
        const QVec tbh(tb.begin(), tb.begin() + a.rank);
        w[b] = dot(a.rd.pos_weight[p], tbh) * sign;
        if (w[b] != 0) zero = false;
      }
      if (!zero && std::find(candidates.begin(), candidates.end(), w) == candidates.end())
        candidates.push_back(w);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& w : candidates) {
    // kernel of the stacked (ad(t_b) - w_b) on `space` coordinates
    QMat sys(0, space.dim());
    sys.cols = space.dim();
    for (std::size_t b = 0; b < t.dim(); ++b) {
      std::vector<Element> cols;
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Element br = bracket(a, t.basis_vector(b), space.basis_vector(j));
        br = vec_sub(br, vec_scale(space.basis_vector(j), w[b]));
        cols.push_back(br);
      }
      for (std::size_t row = 0; row < a.dim; ++row) {
        QVec eq(space.dim());
        bool nonzero = false;
        for (std::size_t j = 0; j < space.dim(); ++j) {
          eq[j] = cols[j][row];
          if (eq[j] != 0) nonzero = true;
        }
        if (nonzero) sys.append_row(eq);
      }
    }
    const QMat ker = kernel(sys);
    if (ker.rows == 0) continue;
    QMat rows(0, a.dim);
    rows.cols = a.dim;
    for (std::size_t i = 0; i < ker.rows; ++i) {
      QVec v(a.dim, Rat(0));
      for (std::size_t j = 0; j < space.dim(); ++j)
        if (ker.at(i, j) != 0) v = vec_add(v, vec_scale(space.basis_vector(j), ker.at(i, j)));
      rows.append_row(v);
    }
    out.weights.push_back(w);
    out.weight_spaces.push_back(Subspace::span(rows, a.dim));
  }
  return out;
}

LeviSplit levi_split(const ChevalleyAlgebra& a, const ConstructedParabolic& cp,
                     const SymmetricPair& pair) {
  if (!cp.certified) fail(ErrorKind::HypothesisViolated, "Levi split of an uncertified parabolic");
  const Subspace& lprime = cp.levi;
  const Subspace center = centralizer(a, lprime, lprime);
  const Subspace t = lprime.intersect(a.cartan_subspace());
  if (centralizer(a, t, lprime) != t)
    fail(ErrorKind::DegenerateSplit,
         "l' cap h is not a Cartan subalgebra of l'; instance outside the supported class");

  ToralDecomposition dec = decompose_under_torus(a, t, lprime);
  std::size_t covered = dec.zero_part.dim();
  for (const auto& ws : dec.weight_spaces) covered += ws.dim();
  if (covered != lprime.dim() || dec.zero_part != t)
    fail(ErrorKind::DegenerateSplit, "root decomposition of l' does not close");
  for (const auto& ws : dec.weight_spaces)
    if (ws.dim() != 1) fail(ErrorKind::DegenerateSplit, "root multiplicity above one in l'");

  // Dual pairing of root functionals through the invariant form on t.
  QMat gram(t.dim(), t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      gram.at(i, j) = invariant_form(a, t.basis_vector(i), t.basis_vector(j));
  const QMat gram_inv = mat_inverse(gram);
  auto pairing = [&](const QVec& x, const QVec& y) { return dot(x, mat_apply(gram_inv, y)); };

  // Simple ideals = connected components of the non-orthogonality graph.
  const std::size_t nroots = dec.weights.size();
  std::vector<std::size_t> comp(nroots);
  std::iota(comp.begin(), comp.end(), std::size_t(0));
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (std::size_t i = 0; i < nroots; ++i)
    for (std::size_t j = i + 1; j < nroots; ++j)
      if (pairing(dec.weights[i], dec.weights[j]) != 0) comp[find(i)] = find(j);

  LeviSplit out;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < nroots; ++i)
    if (find(i) == i) reps.push_back(i);
  for (std::size_t rep : reps) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < nroots; ++i) {
      if (find(i) != rep) continue;
      rows.push_back(dec.weight_spaces[i].basis_vector(0));
      for (std::size_t j = 0; j < nroots; ++j) {
        if (find(j) != rep) continue;
        const Element br = bracket(a, dec.weight_spaces[i].basis_vector(0),
                                   dec.weight_spaces[j].basis_vector(0));
        if (!vec_is_zero(br)) rows.push_back(br);
      }
    }
    Subspace ideal = Subspace::span_vectors(rows, a.dim);
    out.simple_ideals.push_back(ideal);
    out.ideal_compact.push_back(pair.kprime.contains(ideal));
  }

  const Subspace z_k = center.intersect(pair.kprime);
  const Subspace z_p = center.intersect(pair.pprime);
  if (z_k.dim() + z_p.dim() != center.dim())
    fail(ErrorKind::DegenerateSplit, "center of l' is not theta-split");

  Subspace lc = z_k, ln = z_p;
  for (std::size_t i = 0; i < out.simple_ideals.size(); ++i) {
    if (out.ideal_compact[i])
      lc = lc.sum(out.simple_ideals[i]);
    else
      ln = ln.sum(out.simple_ideals[i]);
  }
  out.l_c = lc;
  out.l_n = ln;

  if (lc.sum(ln).dim() != lprime.dim() || lc.intersect(ln).dim() != 0)
    fail(ErrorKind::DegenerateSplit, "compact/noncompact split does not decompose l'");
  if (!pair.kprime.contains(lc)) fail(ErrorKind::DegenerateSplit, "l'_c escapes k'");
  const Subspace lp = lprime.intersect(pair.pprime);
  if (bracket_span(a, lp, lp).sum(lp) != ln)
    fail(ErrorKind::EqualityViolated, "l'_n != [l' cap p', l' cap p'] + l' cap p'");

  out.h_c = t.intersect(lc);
  if (centralizer(a, out.h_c, lc) != out.h_c)
    fail(ErrorKind::DegenerateSplit, "h_c is not a Cartan subalgebra of l'_c");

  // Roots of l_c: restrict the t-functionals of the compact root spaces.
  std::vector<QVec> borel_rows;
  for (std::size_t b = 0; b < out.h_c.dim(); ++b) borel_rows.push_back(out.h_c.basis_vector(b));
  for (std::size_t i = 0; i < nroots; ++i) {
    if (!lc.contains(dec.weight_spaces[i])) continue;
    QVec vals(out.h_c.dim(), Rat(0));
    for (std::size_t b = 0; b < out.h_c.dim(); ++b) {
      const QVec coords = t.coordinates(out.h_c.basis_vector(b));
      vals[b] = dot(dec.weights[i], coords);
    }
    out.roots_c.push_back(vals);
    out.root_vectors_c.push_back(dec.weight_spaces[i].basis_vector(0));
  }
  for (std::size_t i = 0; i < out.roots_c.size(); ++i) {
    // lex positivity: sign of the first nonzero value
    int sgn = 0;
    for (const auto& v : out.roots_c[i]) {
      if (v > 0) { sgn = 1; break; }
      if (v < 0) { sgn = -1; break; }
    }
    if (sgn == 0) fail(ErrorKind::DegenerateSplit, "zero root functional on h_c");
    if (sgn > 0) {
      out.positive_roots_c.push_back(i);
      borel_rows.push_back(out.root_vectors_c[i]);
    }
  }
  out.borel_c = Subspace::span_vectors(borel_rows, a.dim);
  if (!is_subalgebra(a, out.borel_c))
    fail(ErrorKind::DegenerateSplit, "chosen Borel of l'_c is not a subalgebra");
  return out;
}

Subspace construct_qdoubleprime(const ChevalleyAlgebra& a, const ConstructedParabolic& cp,
                                const LeviSplit& split, const SymmetricPair& pair,
                                const PolyBudget& budget) {
  const Subspace qpp = split.borel_c.sum(split.l_n).sum(cp.nilradical);
  if (qpp.dim() != split.borel_c.dim() + split.l_n.dim() + cp.nilradical.dim())
    fail(ErrorKind::CertificationFailed, "q'' summands are not independent");
  const CertifyResult cert = certify_parabolic(a, pair, qpp, budget);
  if (!cert.certified)
    fail(ErrorKind::CertificationFailed, "q'' fails parabolicity: " + cert.reason);
  if (qpp.intersect(pair.pprime) != cp.qprime.intersect(pair.pprime))
    fail(ErrorKind::CertificationFailed, "q'' changes the p'-part");
  return qpp;
}

}  // namespace branchkit
