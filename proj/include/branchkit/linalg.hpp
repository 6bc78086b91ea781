// Dense exact-rational matrices: reduced row echelon form, kernels, solving.
// Everything downstream (subspaces, eigenspaces, Hom solvers) reduces to this.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "branchkit/rational.hpp"

namespace branchkit {

struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows);

  QVec row(std::size_t i) const;
  void append_row(const QVec& r);

  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat mat_mul(const QMat& x, const QMat& y);
QVec mat_apply(const QMat& m, const QVec& v);      // m * v (column vector)
QVec vec_apply_mat(const QVec& v, const QMat& m);  // v^T * m
QMat mat_add(const QMat& x, const QMat& y);
QMat mat_sub(const QMat& x, const QMat& y);
QMat mat_scale(const QMat& x, const Rat& c);
QMat mat_transpose(const QMat& x);

QVec vec_add(const QVec& x, const QVec& y);
QVec vec_sub(const QVec& x, const QVec& y);
QVec vec_scale(const QVec& x, const Rat& c);
bool vec_is_zero(const QVec& x);
Rat dot(const QVec& x, const QVec& y);

// In-place reduced row echelon form: leading 1 pivots, zeros above and below,
// zero rows dropped, rows ordered by pivot column. Returns pivot columns.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(QMat m);

// Row basis of {x : m x = 0}, in canonical RREF.
QMat kernel(const QMat& m);

// One solution of m x = b; empty vector if inconsistent.
// `solvable` reports consistency separately since x = () is valid for cols = 0.
QVec solve(const QMat& m, const QVec& b, bool& solvable);

// Inverse of a square nonsingular matrix; throws ShapeMismatch if singular.
QMat mat_inverse(const QMat& m);

// Determinant by fraction-free style Gaussian elimination over Q.
Rat determinant(QMat m);

}  // namespace branchkit
