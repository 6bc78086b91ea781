// Sparse multivariate polynomials over Q and the Samuelson-Berkowitz
// characteristic polynomial. Used for the symbolic nilpotent-cone certificate:
// the generic element of a subspace has its char poly computed exactly, and
// membership of the whole subspace in the nilcone is the identical vanishing
// of every coefficient below the top power.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/linalg.hpp"
#include "branchkit/rational.hpp"

namespace branchkit {

// Monomial = exponent vector; number of variables fixed per computation.
using Mono = std::vector<std::uint32_t>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rat& c) const;

  Rat evaluate(const QVec& point) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_ = 0;
  std::map<Mono, Rat> terms_;  // zero coefficients never stored
};

struct PolyBudget {
  // Cap on the term count of any intermediate polynomial. Blown budgets raise
  // BudgetExceeded so callers can fall back to other criteria.
  std::size_t max_terms = 200000;
  void check(const Poly& p) const {
    if (p.term_count() > max_terms)
      fail(ErrorKind::BudgetExceeded, "polynomial term budget exceeded");
  }
};

using PolyMat = std::vector<std::vector<Poly>>;

// Characteristic polynomial coefficients of an n x n polynomial matrix,
// division-free (Samuelson-Berkowitz). Returns c[0..n] with
// char(x) = sum_i c[i] x^i and c[n] = 1.
std::vector<Poly> charpoly_berkowitz(const PolyMat& m, const PolyBudget& budget);

// Scalar version for plain rational matrices.
QVec charpoly(const QMat& m);

// Searches the integer grid {0,..,span}^nvars for a point where p is nonzero.
// A nonzero polynomial of per-variable degree <= span is guaranteed to be hit.
bool find_nonvanishing_point(const Poly& p, std::uint32_t span, QVec& point_out);

}  // namespace branchkit
