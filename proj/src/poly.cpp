#include "branchkit/poly.hpp"

namespace branchkit {

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  Mono m(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Rat Poly::evaluate(const QVec& point) const {
  if (point.size() != nvars_) fail(ErrorKind::ShapeMismatch, "evaluation point arity");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

// Samuelson-Berkowitz. For the r x r leading principal submatrix with block
// form [[M, C],[R, a]] (M of size r-1), the Toeplitz transfer column is
// (1, -a, -R C, -R M C, -R M^2 C, ...) and the char poly coefficient vector
// of size r+1 is the Toeplitz product with the size-r vector of the previous
// step. No division occurs, so the recursion is valid over Q[t_1..t_m].
std::vector<Poly> charpoly_berkowitz(const PolyMat& m, const PolyBudget& budget) {
  const std::size_t n = m.size();
  const std::size_t nv = n == 0 ? 0 : m[0][0].nvars();
  // coeffs ordered leading-first: v[0] x^r + v[1] x^{r-1} + ... + v[r]
  std::vector<Poly> v{Poly::constant(nv, 1)};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<Poly> t(r + 1, Poly(nv));
    t[0] = Poly::constant(nv, 1);
    t[1] = -m[r - 1][r - 1];
    if (r >= 2) {
      // w = C (column above the diagonal entry), then iterate w <- M w.
      std::vector<Poly> w(r - 1, Poly(nv));
      for (std::size_t i = 0; i < r - 1; ++i) w[i] = m[i][r - 1];
      for (std::size_t k = 2; k <= r; ++k) {
        Poly rc(nv);
        for (std::size_t j = 0; j < r - 1; ++j) rc = rc + m[r - 1][j] * w[j];
        budget.check(rc);
        t[k] = -rc;
        if (k == r) break;
        std::vector<Poly> w2(r - 1, Poly(nv));
        for (std::size_t i = 0; i < r - 1; ++i) {
          for (std::size_t j = 0; j < r - 1; ++j) w2[i] = w2[i] + m[i][j] * w[j];
          budget.check(w2[i]);
        }
        w.swap(w2);
      }
    }
    std::vector<Poly> nv_next(r + 1, Poly(nv));
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (i < j || i - j > r) continue;
        nv_next[i] = nv_next[i] + t[i - j] * v[j];
      }
      budget.check(nv_next[i]);
    }
    v.swap(nv_next);
  }
  // Reorder to c[i] = coefficient of x^i.
  std::vector<Poly> out(n + 1, Poly(nv));
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = v[i];
  return out;
}

QVec charpoly(const QMat& m) {
  if (m.rows != m.cols) fail(ErrorKind::ShapeMismatch, "charpoly of non-square matrix");
  PolyMat pm(m.rows, std::vector<Poly>(m.rows, Poly(0)));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.rows; ++j) pm[i][j] = Poly::constant(0, m.at(i, j));
  PolyBudget budget;
  budget.max_terms = 10;  // scalar case: at most one term per entry
  auto cs = charpoly_berkowitz(pm, budget);
  QVec out(cs.size(), Rat(0));
  for (std::size_t i = 0; i < cs.size(); ++i)
    out[i] = cs[i].is_zero() ? Rat(0) : cs[i].terms().begin()->second;
  return out;
}

bool find_nonvanishing_point(const Poly& p, std::uint32_t span, QVec& point_out) {
  if (p.is_zero()) return false;
  const std::size_t nv = p.nvars();
  std::vector<std::uint32_t> idx(nv, 0);
  while (true) {
    QVec pt(nv);
    for (std::size_t i = 0; i < nv; ++i) pt[i] = Rat(static_cast<long>(idx[i]));
    if (p.evaluate(pt) != 0) {
      point_out = pt;
      return true;
    }
    std::size_t pos = 0;
    while (pos < nv && idx[pos] == span) idx[pos++] = 0;
    if (pos == nv) return false;
    ++idx[pos];
  }
}

}  // namespace branchkit
