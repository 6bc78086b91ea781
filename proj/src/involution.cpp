#include "branchkit/involution.hpp"

#include <cstdlib>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

void validate_involution(const ChevalleyAlgebra& a, const QMat& m) {
  if (m.rows != a.dim || m.cols != a.dim)
    fail(ErrorKind::ShapeMismatch, "involution matrix has wrong shape");
  if (mat_mul(m, m) != QMat::identity(a.dim))
    fail(ErrorKind::NotInvolutive, "matrix squared is not the identity");
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Element mi = mat_apply(m, a.basis_element(i));
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      const Element mj = mat_apply(m, a.basis_element(j));
      const Element lhs = mat_apply(m, bracket(a, a.basis_element(i), a.basis_element(j)));
      const Element rhs = bracket(a, mi, mj);
      if (lhs != rhs)
        fail(ErrorKind::NotAutomorphism,
             "bracket compatibility fails on basis pair (" + a.basis_labels[i] + ", " +
                 a.basis_labels[j] + ")");
    }
  }
  // The form is canonical, so automorphisms must preserve it.
  const QMat mt = mat_transpose(m);
  if (mat_mul(mt, mat_mul(a.killing, m)) != a.killing)
    fail(ErrorKind::NotAutomorphism, "invariant form is not preserved");
}

}  // namespace

LieInvolution involution_from_matrix(const ChevalleyAlgebra& a, const QMat& m) {
  validate_involution(a, m);
  return LieInvolution{m};
}

LieInvolution involution_from_signs(const ChevalleyAlgebra& a, const std::vector<long>& root_map,
                                    const QMat& cartan_action, const std::vector<int>& signs) {
  const std::size_t np = a.npos;
  std::vector<long> rm = root_map;
  if (rm.empty()) {
    rm.resize(np);
    for (std::size_t p = 0; p < np; ++p) rm[p] = static_cast<long>(p) + 1;
  }
  if (rm.size() != np) fail(ErrorKind::ShapeMismatch, "root_map length != positive root count");
  std::vector<int> sg = signs;
  if (sg.empty()) sg.assign(np, 1);
  if (sg.size() != np) fail(ErrorKind::ShapeMismatch, "signs length != positive root count");
  std::vector<bool> hit(np, false);
  QMat m(a.dim, a.dim);
  QMat ca = cartan_action;
  if (ca.rows == 0) ca = QMat::identity(a.rank);
  if (ca.rows != a.rank || ca.cols != a.rank)
    fail(ErrorKind::ShapeMismatch, "cartan_action shape");
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) m.at(i, j) = ca.at(i, j);
  for (std::size_t p = 0; p < np; ++p) {
    const long target = rm[p];
    if (target == 0 || std::size_t(std::abs(target)) > np)
      fail(ErrorKind::ShapeMismatch, "root_map entry out of range");
    const std::size_t q = std::size_t(std::abs(target)) - 1;
    if (hit[q]) fail(ErrorKind::ShapeMismatch, "root_map is not a permutation");
    hit[q] = true;
    if (sg[p] != 1 && sg[p] != -1) fail(ErrorKind::ShapeMismatch, "signs must be +-1");
    if (target > 0) {
      m.at(a.e_index(q), a.e_index(p)) = sg[p];
      m.at(a.f_index(q), a.f_index(p)) = sg[p];
    } else {
      m.at(a.f_index(q), a.e_index(p)) = sg[p];
      m.at(a.e_index(q), a.f_index(p)) = sg[p];
    }
  }
  return involution_from_matrix(a, m);
}

LieInvolution sign_involution(const ChevalleyAlgebra& a, const std::vector<int>& simple_signs) {
  if (simple_signs.size() != a.rank)
    fail(ErrorKind::ShapeMismatch, "simple_signs length != rank");
  std::vector<int> sg(a.npos, 1);
  for (std::size_t p = 0; p < a.npos; ++p) {
    int s = 1;
    for (std::size_t i = 0; i < a.rank; ++i)
      if (a.rd.pos_alpha[p][i] % 2 != 0 && simple_signs[i] == -1) s = -s;
    sg[p] = s;
  }
  return involution_from_signs(a, {}, {}, sg);
}

LieInvolution identity_involution(const ChevalleyAlgebra& a) {
  return LieInvolution{QMat::identity(a.dim)};
}

LieInvolution swap_involution(const ChevalleyAlgebra& a, std::size_t f1, std::size_t f2) {
  if (f1 >= a.rd.type.size() || f2 >= a.rd.type.size() || f1 == f2)
    fail(ErrorKind::ShapeMismatch, "swap factors out of range");
  if (a.rd.type[f1].family != a.rd.type[f2].family || a.rd.type[f1].rank != a.rd.type[f2].rank)
    fail(ErrorKind::ShapeMismatch, "swap factors have different type");
  std::size_t off1 = 0, off2 = 0, off = 0;
  for (std::size_t f = 0; f < a.rd.type.size(); ++f) {
    if (f == f1) off1 = off;
    if (f == f2) off2 = off;
    off += a.rd.type[f].rank;
  }
  const unsigned r = a.rd.type[f1].rank;
  auto map_simple = [&](std::size_t i) {
    if (i >= off1 && i < off1 + r) return off2 + (i - off1);
    if (i >= off2 && i < off2 + r) return off1 + (i - off2);
    return i;
  };
  QMat ca(a.rank, a.rank);
  for (std::size_t i = 0; i < a.rank; ++i) ca.at(map_simple(i), i) = 1;
  std::vector<long> rm(a.npos);
  for (std::size_t p = 0; p < a.npos; ++p) {
    std::vector<long> image(a.rank, 0);
    for (std::size_t i = 0; i < a.rank; ++i) image[map_simple(i)] = a.rd.pos_alpha[p][i];
    auto found = a.rd.find_root(image);
    if (!found || found->second < 0) fail(ErrorKind::ShapeMismatch, "swap does not permute roots");
    rm[p] = static_cast<long>(found->first) + 1;
  }
  return involution_from_signs(a, rm, ca, {});
}

QMat chevalley_involution_matrix(const ChevalleyAlgebra& a) {
  QMat m(a.dim, a.dim);
  for (std::size_t i = 0; i < a.rank; ++i) m.at(i, i) = -1;
  for (std::size_t p = 0; p < a.npos; ++p) {
    m.at(a.f_index(p), a.e_index(p)) = -1;
    m.at(a.e_index(p), a.f_index(p)) = -1;
  }
  return m;
}

SymmetricPair derive_pair(const ChevalleyAlgebra& a, const LieInvolution& theta,
                          const LieInvolution& sigma) {
  if (mat_mul(theta.matrix, sigma.matrix) != mat_mul(sigma.matrix, theta.matrix))
    fail(ErrorKind::NonCommuting, "theta and sigma do not commute");
  SymmetricPair sp;
  sp.theta = theta;
  sp.sigma = sigma;
  const QMat id = QMat::identity(a.dim);
  auto eigenspace = [&](const QMat& m, int sign) {
    QMat sys = sign > 0 ? mat_sub(m, id) : mat_add(m, id);
    QMat ker = kernel(sys);
    return Subspace::span(ker, a.dim);
  };
  sp.k = eigenspace(theta.matrix, +1);
  sp.p = eigenspace(theta.matrix, -1);
  sp.gprime = eigenspace(sigma.matrix, +1);
  sp.g_minus_sigma = eigenspace(sigma.matrix, -1);
  sp.kprime = sp.k.intersect(sp.gprime);
  sp.pprime = sp.p.intersect(sp.gprime);
  sp.pr_matrix = mat_scale(mat_add(id, sigma.matrix), rat(1, 2));
  sp.bar_matrix = mat_mul(theta.matrix, chevalley_involution_matrix(a));

  if (sp.k.dim() + sp.p.dim() != a.dim || sp.gprime.dim() + sp.g_minus_sigma.dim() != a.dim)
    fail(ErrorKind::NotInvolutive, "eigenspaces do not decompose the algebra");
  if (sp.kprime.dim() + sp.pprime.dim() != sp.gprime.dim())
    fail(ErrorKind::NonCommuting, "k' + p' does not decompose g'");
  if (!is_subalgebra(a, sp.k) || !is_subalgebra(a, sp.gprime))
    fail(ErrorKind::NotAutomorphism, "fixed-point sets are not subalgebras");
  if (!sp.p.contains(bracket_span(a, sp.k, sp.p)))
    fail(ErrorKind::NotAutomorphism, "[k, p] escapes p");
  if (!sp.g_minus_sigma.contains(bracket_span(a, sp.gprime, sp.g_minus_sigma)))
    fail(ErrorKind::NotAutomorphism, "[g', g^{-sigma}] escapes g^{-sigma}");
  // The invariant form must stay nondegenerate on g' for perp computations.
  QMat gram(sp.gprime.dim(), sp.gprime.dim());
  for (std::size_t i = 0; i < sp.gprime.dim(); ++i)
    for (std::size_t j = 0; j < sp.gprime.dim(); ++j)
      gram.at(i, j) = invariant_form(a, sp.gprime.basis_vector(i), sp.gprime.basis_vector(j));
  if (rank(gram) != sp.gprime.dim())
    fail(ErrorKind::NotAutomorphism, "invariant form degenerate on g'");
  return sp;
}

Subspace project(const ChevalleyAlgebra& a, const SymmetricPair& pair, const Subspace& s) {
  if (s.ambient() != a.dim) fail(ErrorKind::AmbientMismatch, "projection ambient mismatch");
  Subspace out = apply_linear_map(pair.pr_matrix, s);
  if (!pair.gprime.contains(out))
    fail(ErrorKind::NotAutomorphism, "projection image escapes g'");
  return out;
}

}  // namespace branchkit
