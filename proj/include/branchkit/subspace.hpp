// Rational subspaces in canonical reduced-echelon form. Equality of the
// canonical matrices is equality of subspaces, so no tolerances exist anywhere.
#pragma once

#include "branchkit/linalg.hpp"

namespace branchkit {

class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Rows span the subspace; they are echelonized on construction.
  static Subspace span(const QMat& rows, std::size_t ambient_dim);
  static Subspace span_vectors(const std::vector<QVec>& vecs, std::size_t ambient_dim);

  std::size_t ambient() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows; }
  const QMat& basis() const { return basis_; }
  QVec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool operator==(const Subspace& o) const {
    return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
  }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& s) const;

  // Residual of v after reduction by the echelon basis. Zero iff v is a member.
  QVec reduce(const QVec& v) const;

  // Coordinates of a member vector in the echelon basis; throws NotContained otherwise.
  QVec coordinates(const QVec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Standard basis columns that are not pivot columns: lifting these gives the
  // canonical complement used for quotient computations.
  std::vector<std::size_t> nonpivot_columns() const;
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  QMat basis_;  // RREF, full row rank
  std::vector<std::size_t> pivots_;
  std::size_t ambient_dim_ = 0;
};

// {v in within : gram(v, s) = 0}; gram is a symmetric bilinear form on the
// ambient space. Throws NotContained unless s is inside within.
Subspace orthocomplement(const QMat& gram, const Subspace& s, const Subspace& within);

// Image of s under the linear map given by matrix m (columns = ambient dim of s).
Subspace apply_linear_map(const QMat& m, const Subspace& s);

}  // namespace branchkit
