#include "branchkit/subspace.hpp"

#include "branchkit/errors.hpp"

namespace branchkit {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_.cols = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(QMat::identity(ambient_dim), ambient_dim);
}

Subspace Subspace::span(const QMat& rows, std::size_t ambient_dim) {
  if (rows.rows > 0 && rows.cols != ambient_dim)
    fail(ErrorKind::AmbientMismatch, "spanning rows do not match ambient dimension");
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = rows;
  s.basis_.cols = ambient_dim;
  s.pivots_ = rref(s.basis_);
  return s;
}

Subspace Subspace::span_vectors(const std::vector<QVec>& vecs, std::size_t ambient_dim) {
  QMat m(0, ambient_dim);
  m.cols = ambient_dim;
  for (const auto& v : vecs) m.append_row(v);
  return span(m, ambient_dim);
}

QVec Subspace::reduce(const QVec& v) const {
  if (v.size() != ambient_dim_) fail(ErrorKind::AmbientMismatch, "vector/ambient mismatch");
  QVec r = v;
  for (std::size_t i = 0; i < basis_.rows; ++i) {
    const Rat c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (basis_.at(i, j) != 0) r[j] -= c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const QVec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_dim_ != ambient_dim_) fail(ErrorKind::AmbientMismatch, "ambient mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_vector(i))) return false;
  return true;
}

QVec Subspace::coordinates(const QVec& v) const {
  if (!contains(v)) fail(ErrorKind::NotContained, "vector not in subspace");
  QVec c(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_dim_ != ambient_dim_) fail(ErrorKind::AmbientMismatch, "ambient mismatch");
  QMat stacked = basis_;
  stacked.cols = ambient_dim_;
  for (std::size_t i = 0; i < o.dim(); ++i) stacked.append_row(o.basis_vector(i));
  return span(stacked, ambient_dim_);
}

// Zassenhaus: echelonize [A|A; B|0]; rows with zero left block carry the
// intersection in the right block.
Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_dim_ != ambient_dim_) fail(ErrorKind::AmbientMismatch, "ambient mismatch");
  const std::size_t n = ambient_dim_;
  QMat z(dim() + o.dim(), 2 * n);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = basis_.at(i, j);
      z.at(i, n + j) = basis_.at(i, j);
    }
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(dim() + i, j) = o.basis_.at(i, j);
  rref(z);
  QMat inter(0, n);
  inter.cols = n;
  for (std::size_t i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j)
      if (z.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    QVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = z.at(i, n + j);
    inter.append_row(v);
  }
  return span(inter, n);
}

std::vector<std::size_t> Subspace::nonpivot_columns() const {
  std::vector<bool> is_piv(ambient_dim_, false);
  for (auto p : pivots_) is_piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_dim_; ++j)
    if (!is_piv[j]) out.push_back(j);
  return out;
}

Subspace orthocomplement(const QMat& gram, const Subspace& s, const Subspace& within) {
  if (s.ambient() != within.ambient()) fail(ErrorKind::AmbientMismatch, "ambient mismatch");
  if (!within.contains(s)) fail(ErrorKind::NotContained, "s is not inside within");
  // Unknown x = sum c_k w_k; conditions gram(x, s_i) = 0.
  QMat sys(s.dim(), within.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const QVec gi = mat_apply(gram, s.basis_vector(i));
    for (std::size_t k = 0; k < within.dim(); ++k) sys.at(i, k) = dot(within.basis_vector(k), gi);
  }
  QMat ker = kernel(sys);
  QMat rows(0, s.ambient());
  rows.cols = s.ambient();
  for (std::size_t i = 0; i < ker.rows; ++i) {
    QVec v(s.ambient(), Rat(0));
    for (std::size_t k = 0; k < within.dim(); ++k)
      if (ker.at(i, k) != 0) v = vec_add(v, vec_scale(within.basis_vector(k), ker.at(i, k)));
    rows.append_row(v);
  }
  return Subspace::span(rows, s.ambient());
}

Subspace apply_linear_map(const QMat& m, const Subspace& s) {
  if (m.cols != s.ambient()) fail(ErrorKind::ShapeMismatch, "map/ambient mismatch");
  QMat rows(0, m.rows);
  rows.cols = m.rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.append_row(mat_apply(m, s.basis_vector(i)));
  return Subspace::span(rows, m.rows);
}

}  // namespace branchkit
