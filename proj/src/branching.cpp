#include "branchkit/branching.hpp"

#include <algorithm>
#include <functional>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

// Signed root list of a subspace spanned by root-vector basis elements.
std::vector<QVec> coordinate_subspace_roots(const ChevalleyAlgebra& a, const Subspace& s,
                                            bool cartan_forbidden) {
  std::vector<QVec> roots;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const QVec v = s.basis_vector(i);
    std::size_t nz = 0, idx = 0;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0) {
        ++nz;
        idx = t;
      }
    if (nz != 1) fail(ErrorKind::BasisMismatch, "subspace is not spanned by basis vectors");
    if (idx < a.rank) {
      if (cartan_forbidden) fail(ErrorKind::BasisMismatch, "unexpected Cartan component");
      continue;
    }
    if (idx < a.rank + a.npos)
      roots.push_back(a.rd.pos_weight[idx - a.rank]);
    else
      roots.push_back(vec_scale(a.rd.pos_weight[idx - a.rank - a.npos], rat(-1)));
  }
  return roots;
}

QVec evaluate_on_rows(const QVec& weight_coords, const Subspace& rows, std::size_t rank) {
  QVec out(rows.dim(), Rat(0));
  for (std::size_t b = 0; b < rows.dim(); ++b) {
    const QVec v = rows.basis_vector(b);
    const QVec vh(v.begin(), v.begin() + rank);
    out[b] = dot(vh, weight_coords);
  }
  return out;
}

}  // namespace

LambdaParam check_lambda(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                         const SymmetricPair& pair, const QVec& lambda_coords) {
  LambdaParam lp;
  lp.z_l = centralizer(a, pb.l, pb.l);
  if (!a.cartan_subspace().contains(lp.z_l))
    fail(ErrorKind::BasisMismatch, "center of the Levi escapes the Cartan");
  if (lambda_coords.size() != lp.z_l.dim())
    fail(ErrorKind::BasisMismatch, "lambda has " + std::to_string(lambda_coords.size()) +
                                       " coordinates, z(l) has dimension " +
                                       std::to_string(lp.z_l.dim()));
  lp.lambda = lambda_coords;

  const Subspace derived_h = bracket_span(a, pb.l, pb.l).intersect(a.cartan_subspace());
  if (lp.z_l.dim() + derived_h.dim() != a.rank || lp.z_l.intersect(derived_h).dim() != 0)
    fail(ErrorKind::BasisMismatch, "Cartan does not split as z(l) + [l,l]");
  // lambda~(h_i): component of h_i along z(l) in that splitting
  QMat cols(a.dim, lp.z_l.dim() + derived_h.dim());
  for (std::size_t j = 0; j < lp.z_l.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r) cols.at(r, j) = lp.z_l.basis_vector(j)[r];
  for (std::size_t j = 0; j < derived_h.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r)
      cols.at(r, lp.z_l.dim() + j) = derived_h.basis_vector(j)[r];
  lp.lambda_tilde = QVec(a.rank, Rat(0));
  for (std::size_t i = 0; i < a.rank; ++i) {
    bool ok = false;
    const QVec co = solve(cols, a.basis_element(i), ok);
    if (!ok) fail(ErrorKind::BasisMismatch, "Cartan splitting solve failed");
    Rat v(0);
    for (std::size_t j = 0; j < lp.z_l.dim(); ++j) v += co[j] * lambda_coords[j];
    lp.lambda_tilde[i] = v;
  }

  lp.linear = a.rd.is_integral(lp.lambda_tilde);

  lp.unitary_shadow = true;
  const Subspace zp = lp.z_l.intersect(pair.p);
  for (std::size_t i = 0; i < zp.dim(); ++i)
    if (dot(lambda_coords, lp.z_l.coordinates(zp.basis_vector(i))) != 0) {
      lp.unitary_shadow = false;
      break;
    }

  const std::vector<QVec> u_roots = coordinate_subspace_roots(a, pb.u, true);
  const QVec rho_u = vec_scale(pb.two_rho_u, rat(1, 2));
  // rho(n) for the positive system Delta(u) plus the g-positive roots of l
  QVec two_rho_n = pb.two_rho_u;
  for (const auto& r : coordinate_subspace_roots(a, pb.l, false)) {
    bool pos_side = false;
    for (std::size_t p = 0; p < a.npos && !pos_side; ++p)
      if (r == a.rd.pos_weight[p]) pos_side = true;
    if (pos_side) two_rho_n = vec_add(two_rho_n, r);
  }
  const QVec rho_n = vec_scale(two_rho_n, rat(1, 2));

  lp.weakly_fair = true;
  lp.good = true;
  bool first = true;
  for (const auto& alpha : u_roots) {
    const Rat wf = a.rd.form(vec_add(lp.lambda_tilde, rho_u), alpha);
    const Rat gd = a.rd.form(vec_add(lp.lambda_tilde, rho_n), alpha);
    if (first || wf < lp.weakly_fair_min) {
      lp.weakly_fair_min = wf;
      lp.weakly_fair_argmin = alpha;
    }
    if (first || gd < lp.good_min) {
      lp.good_min = gd;
      lp.good_argmin = alpha;
    }
    first = false;
    if (wf < 0) lp.weakly_fair = false;
    if (gd <= 0) lp.good = false;
  }
  return lp;
}

BranchSpace build_branch_space(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                               const SymmetricPair& pair, const LeviSplit& split) {
  BranchSpace bs;
  bs.qbar_plus_gprime = pb.qbar.sum(pair.gprime);
  bs.lifted = bs.qbar_plus_gprime.nonpivot_columns();
  bs.acting = pb.qbar.intersect(pair.gprime);
  const std::size_t d = bs.lifted.size();

  auto quotient_coords = [&](const Element& v) {
    const QVec r = bs.qbar_plus_gprime.reduce(v);
    QVec out(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) out[j] = r[bs.lifted[j]];
    return out;
  };

  for (std::size_t b = 0; b < bs.acting.dim(); ++b) {
    QMat m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const QVec col = quotient_coords(bracket(a, bs.acting.basis_vector(b),
                                               a.basis_element(bs.lifted[j])));
      for (std::size_t r = 0; r < d; ++r) m.at(r, j) = col[r];
    }
    bs.levi_action.push_back(std::move(m));
  }
  // representation check on basis pairs
  for (std::size_t i = 0; i < bs.acting.dim(); ++i)
    for (std::size_t j = i + 1; j < bs.acting.dim(); ++j) {
      const Element br = bracket(a, bs.acting.basis_vector(i), bs.acting.basis_vector(j));
      const QVec co = bs.acting.coordinates(br);
      QMat expect(d, d);
      for (std::size_t t = 0; t < co.size(); ++t)
        if (co[t] != 0) expect = mat_add(expect, mat_scale(bs.levi_action[t], co[t]));
      if (!(mat_sub(mat_mul(bs.levi_action[i], bs.levi_action[j]),
                    mat_mul(bs.levi_action[j], bs.levi_action[i])) == expect))
        fail(ErrorKind::EqualityViolated, "quotient action violates a bracket relation");
    }

  bs.top_on_acting = QVec(bs.acting.dim(), Rat(0));
  for (std::size_t b = 0; b < bs.acting.dim(); ++b) {
    Rat tr(0);
    for (std::size_t r = 0; r < d; ++r) tr += bs.levi_action[b].at(r, r);
    bs.top_on_acting[b] = tr;
  }

  // h_c weight decomposition of the quotient
  const Subspace& hc = split.h_c;
  if (!bs.acting.contains(hc))
    fail(ErrorKind::DegenerateSplit, "h_c is not inside qbar cap g'");
  std::vector<QMat> hmats;
  for (std::size_t b = 0; b < hc.dim(); ++b) {
    const QVec co = bs.acting.coordinates(hc.basis_vector(b));
    QMat m(d, d);
    for (std::size_t t = 0; t < co.size(); ++t)
      if (co[t] != 0) m = mat_add(m, mat_scale(bs.levi_action[t], co[t]));
    hmats.push_back(std::move(m));
  }
  std::vector<QVec> candidates{QVec(hc.dim(), Rat(0))};
  for (std::size_t p = 0; p < a.npos; ++p)
    for (int sign : {+1, -1}) {
      QVec w(hc.dim(), Rat(0));
      for (std::size_t b = 0; b < hc.dim(); ++b) {
        const QVec v = hc.basis_vector(b);
        const QVec vh(v.begin(), v.begin() + a.rank);
        w[b] = dot(a.rd.pos_weight[p], vh) * sign;
      }
      if (std::find(candidates.begin(), candidates.end(), w) == candidates.end())
        candidates.push_back(w);
    }
  std::sort(candidates.begin(), candidates.end());
  bs.to_weight_basis = QMat(d, d);
  std::size_t col = 0;
  for (const auto& w : candidates) {
    QMat sys(0, d);
    sys.cols = d;
    for (std::size_t b = 0; b < hc.dim(); ++b) {
      QMat m = hmats[b];
      for (std::size_t r = 0; r < d; ++r) m.at(r, r) -= w[b];
      for (std::size_t r = 0; r < d; ++r) sys.append_row(m.row(r));
    }
    const QMat ker = hc.dim() == 0 ? QMat::identity(d) : kernel(sys);
    for (std::size_t i = 0; i < ker.rows; ++i) {
      if (col >= d) fail(ErrorKind::DegenerateSplit, "quotient weight spaces overflow");
      for (std::size_t r = 0; r < d; ++r) bs.to_weight_basis.at(r, col) = ker.at(i, r);
      bs.quotient_weights.push_back(w);
      ++col;
    }
    if (hc.dim() == 0) break;
  }
  if (col != d) fail(ErrorKind::DegenerateSplit, "quotient is not h_c-diagonalizable");
  bs.from_weight_basis = mat_inverse(bs.to_weight_basis);
  return bs;
}

BranchProblem prepare_branch_problem(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                     const SymmetricPair& pair, const ConstructedParabolic& cp,
                                     const LeviSplit& split, const LambdaParam& lam) {
  BranchProblem bp;
  bp.a = &a;
  bp.pb = &pb;
  bp.pair = &pair;
  bp.split = &split;
  bp.cp = &cp;
  bp.lam = lam;
  bp.bs = build_branch_space(a, pb, pair, split);
  bp.levi_ctx = context_from_levi(a, split);
  bp.hom_domain = pb.qbar.intersect(cp.levi);
  if (!bp.hom_domain.contains(split.h_c))
    fail(ErrorKind::DegenerateSplit, "h_c is not inside qbar cap l'");
  // scalar shift: lambda~ + trace of the quotient action, on h_c rows
  bp.scalar_shift = evaluate_on_rows(lam.lambda_tilde, split.h_c, a.rank);
  for (std::size_t b = 0; b < split.h_c.dim(); ++b) {
    const QVec co = bp.bs.acting.coordinates(split.h_c.basis_vector(b));
    bp.scalar_shift[b] += dot(co, bp.bs.top_on_acting);
  }
  return bp;
}

DegreeData degree_data(const BranchProblem& bp, unsigned p) {
  DegreeData dd;
  dd.p = p;
  const std::size_t d = bp.bs.lifted.size();
  // multi-indices of total degree p over d letters, lex order
  std::vector<unsigned> cur(d, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == d || d == 0) {
      if (d > 0) cur[pos] = left;
      dd.monomials.push_back(cur);
      return;
    }
    for (unsigned take = 0; take <= left; ++take) {
      cur[pos] = take;
      rec(pos + 1, left - take);
    }
  };
  if (d == 0) {
    if (p == 0) dd.monomials.push_back({});
  } else {
    rec(0, p);
  }
  for (const auto& m : dd.monomials) {
    QVec w = bp.scalar_shift;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) w = vec_add(w, vec_scale(bp.bs.quotient_weights[i], Rat(long(m[i]))));
    dd.weights.push_back(w);
  }
  return dd;
}

namespace {

// Derivation action of a quotient-endomorphism (in the weight basis) on the
// degree-p monomial basis.
QMat sym_power_derivation(const QMat& amat, const std::vector<std::vector<unsigned>>& monos) {
  const std::size_t n = monos.size();
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monos[i]] = i;
  QMat out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& m = monos[c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (amat.at(j, i) == 0) continue;
        auto m2 = m;
        --m2[i];
        ++m2[j];
        out.at(index[m2], c) += Rat(long(m[i])) * amat.at(j, i);
      }
    }
  }
  return out;
}

// rho_M(x) for x given by coordinates in the acting basis: scalar part from
// C_lambda and the top exterior line plus the symmetric-power derivation.
QMat rho_m(const BranchProblem& bp, const DegreeData& dd, const Element& x) {
  const QVec co = bp.bs.acting.coordinates(x);
  const std::size_t d = bp.bs.lifted.size();
  QMat quo(d, d);
  for (std::size_t t = 0; t < co.size(); ++t)
    if (co[t] != 0) quo = mat_add(quo, mat_scale(bp.bs.levi_action[t], co[t]));
  const QMat quo_w = mat_mul(bp.bs.from_weight_basis, mat_mul(quo, bp.bs.to_weight_basis));
  QMat m = sym_power_derivation(quo_w, dd.monomials);
  // scalar: lambda~ on the Cartan component of x plus the top trace
  const QVec xh(x.begin(), x.begin() + bp.a->rank);
  Rat scalar = dot(xh, bp.lam.lambda_tilde) + dot(co, bp.bs.top_on_acting);
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, i) += scalar;
  return m;
}

}  // namespace

std::vector<QVec> enumerate_lambda_candidates(const BranchProblem& bp, const DegreeData& dd) {
  std::vector<QVec> out;
  for (const auto& w : dd.weights) {
    if (!bp.levi_ctx.ws.is_dominant(w) || !bp.levi_ctx.ws.is_integral(w)) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long multiplicity_hom(const BranchProblem& bp, const DegreeData& dd, const QVec& lambda_prime,
                      const ModuleBudget& budget) {
  const ChevalleyAlgebra& a = *bp.a;
  IrreducibleModule F = construct_irreducible(a, bp.levi_ctx, lambda_prime, budget);
  const std::size_t dm = dd.monomials.size();
  // weight-matched unknowns phi_{i in M, j in F}
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < F.dim; ++j)
      if (dd.weights[i] == F.weight_of[j]) slots.push_back({i, j});
  if (slots.empty()) return 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_index;
  for (std::size_t s = 0; s < slots.size(); ++s) slot_index[slots[s]] = s;

  // split of x over l_c + l_n
  const Subspace& lc = bp.split->l_c;
  const Subspace& ln = bp.split->l_n;
  QMat cols(a.dim, lc.dim() + ln.dim());
  for (std::size_t j = 0; j < lc.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r) cols.at(r, j) = lc.basis_vector(j)[r];
  for (std::size_t j = 0; j < ln.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r) cols.at(r, lc.dim() + j) = ln.basis_vector(j)[r];

  QMat sys(0, slots.size());
  sys.cols = slots.size();
  for (std::size_t b = 0; b < bp.hom_domain.dim(); ++b) {
    const Element x = bp.hom_domain.basis_vector(b);
    const QMat rm = rho_m(bp, dd, x);
    bool ok = false;
    const QVec xco = solve(cols, x, ok);
    if (!ok) fail(ErrorKind::BasisMismatch, "hom domain element outside l'_c + l'_n");
    Element xc = a.zero();
    for (std::size_t j = 0; j < lc.dim(); ++j)
      if (xco[j] != 0) xc = vec_add(xc, vec_scale(lc.basis_vector(j), xco[j]));
    const QMat rf = module_action(bp.levi_ctx, F, xc);
    // equations: sum_k phi_{i,k} rf(k,j) - sum_l rm(i,l) phi_{l,j} = 0
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < F.dim; ++j) {
        QVec eq(slots.size(), Rat(0));
        bool nonzero = false;
        for (std::size_t k = 0; k < F.dim; ++k) {
          if (rf.at(k, j) == 0) continue;
          auto it = slot_index.find({i, k});
          if (it == slot_index.end()) continue;
          eq[it->second] += rf.at(k, j);
          nonzero = true;
        }
        for (std::size_t l = 0; l < dm; ++l) {
          if (rm.at(i, l) == 0) continue;
          auto it = slot_index.find({l, j});
          if (it == slot_index.end()) continue;
          eq[it->second] -= rm.at(i, l);
          nonzero = true;
        }
        if (nonzero) sys.append_row(eq);
      }
  }
  if (sys.rows == 0) return static_cast<long>(slots.size());
  return static_cast<long>(slots.size() - rref(sys).size());
}

std::map<QVec, EulerCell> multiplicity_euler(const BranchProblem& bp, const DegreeData& dd) {
  std::map<QVec, EulerCell> out;
  const WeightSystem& ws = bp.levi_ctx.ws;
  for (const auto& mu : dd.weights) {
    const QVec v = vec_add(mu, ws.rho);
    const DominantConjugate dc = to_dominant(ws, v);
    if (!dc.regular) continue;
    const QVec lp = vec_sub(dc.weight, ws.rho);
    EulerCell& cell = out[lp];
    cell.value += dc.det;
    if (dc.moved) cell.sign_mixing = true;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.value == 0 && !it->second.sign_mixing)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

namespace {

// Weakly-fair test for (q'', lambda'): weights of u'' under the Cartan of l''
// paired against lambda' + rho(u'') through the invariant form.
bool weakly_fair_for_qpp(const BranchProblem& bp, const Subspace& qpp, const QVec& lambda_prime) {
  const ChevalleyAlgebra& a = *bp.a;
  const SymmetricPair& pair = *bp.pair;
  const Subspace lpp = qpp.intersect(apply_linear_map(pair.bar_matrix, qpp));
  const Subspace upp = form_orthocomplement(a, qpp, pair.gprime);
  const Subspace hpp = lpp.intersect(a.cartan_subspace());
  if (centralizer(a, hpp, lpp) != hpp)
    fail(ErrorKind::DegenerateSplit, "l'' has no Cartan inside h");
  const ToralDecomposition dec = decompose_under_torus(a, hpp, upp);
  std::size_t covered = dec.zero_part.dim();
  for (const auto& wsp : dec.weight_spaces) covered += wsp.dim();
  if (dec.zero_part.dim() != 0 || covered != upp.dim())
    fail(ErrorKind::DegenerateSplit, "u'' decomposition under h'' failed");
  QVec rho_upp(hpp.dim(), Rat(0));
  for (std::size_t i = 0; i < dec.weights.size(); ++i)
    rho_upp = vec_add(rho_upp,
                      vec_scale(dec.weights[i], Rat(long(dec.weight_spaces[i].dim()), 2)));
  // lambda' extension to h'': zero on [l'', l''] and on the l'_n part of the center
  const Subspace& hc = bp.split->h_c;
  const Subspace rest = bracket_span(a, lpp, lpp).intersect(a.cartan_subspace())
                            .sum(hpp.intersect(bp.split->l_n));
  QMat cols(a.dim, hc.dim() + rest.dim());
  for (std::size_t j = 0; j < hc.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r) cols.at(r, j) = hc.basis_vector(j)[r];
  for (std::size_t j = 0; j < rest.dim(); ++j)
    for (std::size_t r = 0; r < a.dim; ++r) cols.at(r, hc.dim() + j) = rest.basis_vector(j)[r];
  QVec lam_on_hpp(hpp.dim(), Rat(0));
  for (std::size_t b = 0; b < hpp.dim(); ++b) {
    bool ok = false;
    const QVec co = solve(cols, hpp.basis_vector(b), ok);
    if (!ok) fail(ErrorKind::DegenerateSplit, "h'' does not split over h_c + rest");
    Rat v(0);
    for (std::size_t j = 0; j < hc.dim(); ++j) v += co[j] * lambda_prime[j];
    lam_on_hpp[b] = v;
  }
  // pair through the invariant form on h''
  QMat gram(hpp.dim(), hpp.dim());
  for (std::size_t i = 0; i < hpp.dim(); ++i)
    for (std::size_t j = 0; j < hpp.dim(); ++j)
      gram.at(i, j) = invariant_form(a, hpp.basis_vector(i), hpp.basis_vector(j));
  const QMat ginv = mat_inverse(gram);
  const QVec shifted = vec_add(lam_on_hpp, rho_upp);
  for (const auto& alpha : dec.weights)
    if (dot(shifted, mat_apply(ginv, alpha)) < 0) return false;
  return true;
}

}  // namespace

MultiplicityTable branch_table(const BranchProblem& bp, const Subspace& qdoubleprime,
                               unsigned max_p, const BranchOptions& opts) {
  if (!bp.lam.linear)
    fail(ErrorKind::HypothesisViolated, "lambda is not linear (integral)");
  if (!bp.lam.unitary_shadow)
    fail(ErrorKind::HypothesisViolated, "lambda does not vanish on z(l) cap p");
  if (!bp.lam.weakly_fair && !opts.override_weakly_fair)
    fail(ErrorKind::HypothesisViolated,
         "lambda is outside the weakly fair range (pass the override to proceed)");
  MultiplicityTable table;
  table.max_p = max_p;
  for (unsigned p = 0; p <= max_p; ++p) {
    const DegreeData dd = degree_data(bp, p);
    std::vector<QVec> candidates = enumerate_lambda_candidates(bp, dd);
    const auto euler = multiplicity_euler(bp, dd);
    for (const auto& [lp, cell] : euler)
      if (std::find(candidates.begin(), candidates.end(), lp) == candidates.end() &&
          bp.levi_ctx.ws.is_integral(lp))
        candidates.push_back(lp);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& lp : candidates) {
      const long hom = multiplicity_hom(bp, dd, lp, opts.module_budget);
      auto it = euler.find(lp);
      const long ev = it == euler.end() ? 0 : it->second.value;
      const bool mixing = it != euler.end() && it->second.sign_mixing;
      if (!mixing && hom != ev)
        fail(ErrorKind::CriteriaDisagree,
             "hom and Euler multiplicities disagree without sign mixing");
      if (mixing) table.mixing.push_back({p, lp});
      if (hom == 0) continue;
      BranchEntry e;
      e.p = p;
      e.lambda_prime = lp;
      e.multiplicity = hom;
      e.method = mixing ? "hom" : "hom+euler";
      e.weakly_fair_for_qdoubleprime = weakly_fair_for_qpp(bp, qdoubleprime, lp);
      table.entries.push_back(std::move(e));
    }
  }
  return table;
}

std::vector<QVec> blattner_positive_system(const ChevalleyAlgebra& a,
                                           const ThetaStableParabolic& pb,
                                           const SymmetricPair& pair) {
  if (pb.cartan_k.dim() != a.rank)
    fail(ErrorKind::HypothesisViolated, "the full Cartan must lie in k for the bound");
  const QVec xh(pb.grading.begin(), pb.grading.begin() + a.rank);
  std::vector<QVec> out;
  for (std::size_t i = 0; i < pair.k.dim(); ++i) {
    const QVec v = pair.k.basis_vector(i);
    std::size_t nz = 0, idx = 0;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0) {
        ++nz;
        idx = t;
      }
    if (nz != 1) fail(ErrorKind::BasisMismatch, "k is not spanned by basis vectors");
    if (idx < a.rank) continue;
    const bool eside = idx < a.rank + a.npos;
    const std::size_t p = eside ? idx - a.rank : idx - a.rank - a.npos;
    const QVec root = eside ? a.rd.pos_weight[p] : vec_scale(a.rd.pos_weight[p], rat(-1));
    const Rat val = dot(root, xh);
    if (val > 0 || (val == 0 && eside)) out.push_back(root);
  }
  return out;
}

bool blattner_dominant(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                       const SymmetricPair& pair, const QVec& mu) {
  const auto pos = blattner_positive_system(a, pb, pair);
  const auto ws = weight_system_from_roots(pos, a.rd.weight_form);
  for (const auto& alpha : pos)
    if (ws.pair_coroot(mu, alpha) < 0) return false;
  return true;
}

WeightCharacter blattner_character(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                                   const SymmetricPair& pair, const LambdaParam& lam, unsigned p) {
  if (pb.cartan_k.dim() != a.rank)
    fail(ErrorKind::HypothesisViolated, "the full Cartan must lie in k for the bound");
  const Subspace up = pb.u.intersect(pair.p);
  WeightCharacter upchar;
  for (const auto& r : coordinate_subspace_roots(a, up, true)) upchar.add(r, 1);
  QVec shift = lam.lambda_tilde;
  for (const auto& [w, m] : upchar.entries) shift = vec_add(shift, vec_scale(w, Rat(m)));
  if (up.dim() == 0) return p == 0 ? WeightCharacter::line(shift) : WeightCharacter{};
  return tensor_character(WeightCharacter::line(shift), symmetric_power_character(upchar, p));
}

long blattner_bound(const ChevalleyAlgebra& a, const ThetaStableParabolic& pb,
                    const SymmetricPair& pair, const LambdaParam& lam, const QVec& mu,
                    unsigned p) {
  if (!blattner_dominant(a, pb, pair, mu))
    fail(ErrorKind::NotDominant, "mu is not dominant for the chosen positive system of k");
  return blattner_character(a, pb, pair, lam, p).mult(mu);
}

}  // namespace branchkit
