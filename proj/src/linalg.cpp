#include "branchkit/linalg.hpp"

#include <cctype>

#include "branchkit/errors.hpp"

namespace branchkit {

Rat rat_parse(const std::string& s) {
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  QMat m;
  if (rows.empty()) return m;
  m.rows = rows.size();
  m.cols = rows[0].size();
  m.a.reserve(m.rows * m.cols);
  for (const auto& r : rows) {
    if (r.size() != m.cols) fail(ErrorKind::ShapeMismatch, "ragged rows");
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  return m;
}

QVec QMat::row(std::size_t i) const { return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

void QMat::append_row(const QVec& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) fail(ErrorKind::ShapeMismatch, "appending row of wrong length");
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

QMat mat_mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) fail(ErrorKind::ShapeMismatch, "mat_mul dimension mismatch");
  QMat z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rat& xv = x.at(i, k);
      if (xv == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        const Rat& yv = y.at(k, j);
        if (yv != 0) z.at(i, j) += xv * yv;
      }
    }
  return z;
}

QVec mat_apply(const QMat& m, const QVec& v) {
  if (m.cols != v.size()) fail(ErrorKind::ShapeMismatch, "mat_apply dimension mismatch");
  QVec out(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

QVec vec_apply_mat(const QVec& v, const QMat& m) {
  if (m.rows != v.size()) fail(ErrorKind::ShapeMismatch, "vec_apply_mat dimension mismatch");
  QVec out(m.cols, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

QMat mat_add(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::ShapeMismatch, "mat_add shape");
  QMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

QMat mat_sub(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(ErrorKind::ShapeMismatch, "mat_sub shape");
  QMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

QMat mat_scale(const QMat& x, const Rat& c) {
  QMat z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

QMat mat_transpose(const QMat& x) {
  QMat z(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

QVec vec_add(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) fail(ErrorKind::ShapeMismatch, "vec_add length");
  QVec z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

QVec vec_sub(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) fail(ErrorKind::ShapeMismatch, "vec_sub length");
  QVec z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

QVec vec_scale(const QVec& x, const Rat& c) {
  QVec z = x;
  for (auto& v : z) v *= c;
  return z;
}

bool vec_is_zero(const QVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

Rat dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) fail(ErrorKind::ShapeMismatch, "dot length");
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const Rat f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  m.rows = row;  // drop zero rows
  m.a.resize(m.rows * m.cols);
  return pivots;
}

std::size_t rank(QMat m) { return rref(m).size(); }

QMat kernel(const QMat& m) {
  QMat r = m;
  std::vector<std::size_t> piv = rref(r);
  std::vector<bool> is_piv(m.cols, false);
  for (auto p : piv) is_piv[p] = true;
  QMat out(0, m.cols);
  out.cols = m.cols;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    QVec v(m.cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, free);
    out.append_row(v);
  }
  rref(out);  // canonicalize
  return out;
}

QVec solve(const QMat& m, const QVec& b, bool& solvable) {
  if (b.size() != m.rows) fail(ErrorKind::ShapeMismatch, "solve rhs length");
  QMat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> piv = rref(aug);
  solvable = true;
  for (auto p : piv)
    if (p == m.cols) solvable = false;
  QVec x(m.cols, Rat(0));
  if (!solvable) return x;
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, m.cols);
  return x;
}

QMat mat_inverse(const QMat& m) {
  if (m.rows != m.cols) fail(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return m;
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv = rref(aug);
  if (piv.size() != n || piv[n - 1] != n - 1)
    fail(ErrorKind::ShapeMismatch, "singular matrix has no inverse");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rat determinant(QMat m) {
  if (m.rows != m.cols) fail(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  Rat det(1);
  const std::size_t n = m.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Rat f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

}  // namespace branchkit
