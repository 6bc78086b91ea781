#include "branchkit/chevalley.hpp"

#include <algorithm>
#include <cassert>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

// Signed root: positive-root index plus sign.
struct SRoot {
  std::size_t idx;
  int sign;
};

std::vector<long> sroot_alpha(const RootDatum& rd, const SRoot& r) {
  std::vector<long> a = rd.pos_alpha[r.idx];
  if (r.sign < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Structure constants N(a, b) between root vectors. Table holds the
// positive/positive entries; the mixed and negative cases reduce to it by
// N(-a,-b) = -N(a,b) and the triple identity
//   N(x,y)/|z|^2 = N(y,z)/|x|^2 = N(z,x)/|y|^2  for x+y+z = 0.
class NTable {
 public:
  explicit NTable(const RootDatum& rd) : rd_(rd) { build(); }

  // N for arbitrary signed roots whose sum is a root.
  Rat value(const SRoot& a, const SRoot& b) const {
    if (a.sign > 0 && b.sign > 0) return Rat(table_at(a.idx, b.idx));
    if (a.sign < 0 && b.sign < 0) return -Rat(table_at(a.idx, b.idx));
    if (a.sign < 0) return -value(b, a);
    // a positive, b negative; c = -a-b
    std::vector<long> sum = sroot_alpha(rd_, a);
    {
      const auto bb = sroot_alpha(rd_, b);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += bb[i];
    }
    auto sr = rd_.find_root(sum);
    assert(sr.has_value());
    auto [cidx, csign_of_sum] = *sr;
    if (csign_of_sum > 0) {
      // c = -(a+b) negative: N(a,b) = |c|^2/|a|^2 * N(b, c), b,c both negative
      const Rat ratio = rd_.pos_len2[cidx] / rd_.pos_len2[a.idx];
      return ratio * -Rat(table_at(b.idx, cidx));
    }
    // a+b negative, c positive: N(a,b) = |c|^2/|b|^2 * N(c, a), c,a positive
    const Rat ratio = rd_.pos_len2[cidx] / rd_.pos_len2[b.idx];
    return ratio * Rat(table_at(cidx, a.idx));
  }

 private:
  const RootDatum& rd_;
  // filled[i][j], n[i][j] for pairs of positive roots with pos_i + pos_j a root
  std::vector<std::vector<long>> n_;
  std::vector<std::vector<bool>> filled_;

  long table_at(std::size_t i, std::size_t j) const {
    assert(filled_[i][j]);
    return n_[i][j];
  }

  void set(std::size_t i, std::size_t j, long v) {
    n_[i][j] = v;
    n_[j][i] = -v;
    filled_[i][j] = filled_[j][i] = true;
  }

  long string_p(std::size_t ai, std::size_t bi) const {
    // max k with beta - k alpha a root
    std::vector<long> v = rd_.pos_alpha[bi];
    long p = 0;
    while (true) {
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= rd_.pos_alpha[ai][t];
      bool zero = std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
      if (zero || !rd_.find_root(v).has_value()) break;
      ++p;
    }
    return p;
  }

  void build() {
    const std::size_t np = rd_.n_pos();
    n_.assign(np, std::vector<long>(np, 0));
    filled_.assign(np, std::vector<bool>(np, false));
    // Roots are ordered by (height, lex), so walking gamma in index order
    // guarantees all referenced lower-height entries are already present.
    for (std::size_t g = 0; g < np; ++g) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < np; ++i) {
        std::vector<long> rest = rd_.pos_alpha[g];
        for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= rd_.pos_alpha[i][t];
        if (std::all_of(rest.begin(), rest.end(), [](long c) { return c == 0; })) continue;
        auto r = rd_.find_root(rest);
        if (!r || r->second < 0) continue;
        const std::size_t j = r->first;
        if (i < j) pairs.push_back({i, j});
      }
      if (pairs.empty()) continue;  // simple root
      std::sort(pairs.begin(), pairs.end());
      const auto [eps, eta] = pairs.front();  // extraspecial: minimal first member
      set(eps, eta, string_p(eps, eta) + 1);
      for (std::size_t pi = 1; pi < pairs.size(); ++pi) {
        const auto [ai, bi] = pairs[pi];
        // Jacobi for (e_a, e_b, e_{-eps}):
        // N(a,b) N(g,-eps) + N(b,-eps) N(b-eps,a) + N(-eps,a) N(a-eps,b) = 0
        const SRoot A{ai, 1}, B{bi, 1}, E{eps, -1}, G{g, 1};
        Rat term(0);
        std::vector<long> bme = rd_.pos_alpha[bi];
        for (std::size_t t = 0; t < bme.size(); ++t) bme[t] -= rd_.pos_alpha[eps][t];
        if (auto r = rd_.find_root(bme)) {
          const SRoot BME{r->first, r->second};
          term += value(B, E) * value(BME, A);
        }
        std::vector<long> ame = rd_.pos_alpha[ai];
        for (std::size_t t = 0; t < ame.size(); ++t) ame[t] -= rd_.pos_alpha[eps][t];
        if (auto r = rd_.find_root(ame)) {
          const SRoot AME{r->first, r->second};
          term += value(E, A) * value(AME, B);
        }
        const Rat denom = value(G, E);
        if (denom == 0) fail(ErrorKind::UnsupportedType, "degenerate extraspecial recursion");
        const Rat nval = -term / denom;
        if (!is_integer(nval))
          fail(ErrorKind::UnsupportedType, "non-integral structure constant");
        set(ai, bi, static_cast<long>(nval.get_num().get_si()));
      }
    }
  }
};

}  // namespace

Element ChevalleyAlgebra::basis_element(std::size_t i) const {
  Element x = zero();
  x[i] = 1;
  return x;
}

bool ChevalleyAlgebra::in_cartan(const Element& x) const {
  for (std::size_t i = rank; i < dim; ++i)
    if (x[i] != 0) return false;
  return true;
}

Subspace ChevalleyAlgebra::cartan_subspace() const {
  QMat rows(rank, dim);
  for (std::size_t i = 0; i < rank; ++i) rows.at(i, i) = 1;
  return Subspace::span(rows, dim);
}

ChevalleyAlgebra build_algebra(const std::vector<SimpleFactor>& spec, const BuildOptions& opts) {
  const std::size_t est = algebra_dimension(spec);
  if (est > opts.dim_bound)
    fail(ErrorKind::DimensionBound,
         "algebra dimension " + std::to_string(est) + " exceeds bound " +
             std::to_string(opts.dim_bound));

  ChevalleyAlgebra a;
  a.rd = build_root_datum(spec);
  a.rank = a.rd.rank;
  a.npos = a.rd.n_pos();
  a.dim = a.rank + 2 * a.npos;
  a.sign_convention = "extraspecial-pairs-positive";

  for (std::size_t i = 0; i < a.rank; ++i) a.basis_labels.push_back("h" + std::to_string(i + 1));
  auto root_name = [&](std::size_t p) {
    std::string s;
    for (std::size_t i = 0; i < a.rank; ++i) {
      const long c = a.rd.pos_alpha[p][i];
      if (c == 0) continue;
      if (!s.empty()) s += "+";
      if (c != 1) s += std::to_string(c);
      s += "a" + std::to_string(i + 1);
    }
    return s;
  };
  for (std::size_t p = 0; p < a.npos; ++p) a.basis_labels.push_back("e[" + root_name(p) + "]");
  for (std::size_t p = 0; p < a.npos; ++p) a.basis_labels.push_back("f[" + root_name(p) + "]");

  NTable nt(a.rd);

  auto sroot_of_basis = [&](std::size_t b) -> SRoot {
    if (b < a.rank + a.npos) return SRoot{b - a.rank, 1};
    return SRoot{b - a.rank - a.npos, -1};
  };

  a.brackets.assign(a.dim, {});
  for (std::size_t i = 0; i < a.dim; ++i) a.brackets[i].assign(a.dim, {});

  auto set_bracket = [&](std::size_t i, std::size_t j,
                         std::vector<std::pair<std::size_t, Rat>> v) {
    a.brackets[i][j] = v;
    for (auto& [k, c] : v) c = -c;
    a.brackets[j][i] = v;
  };

  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      std::vector<std::pair<std::size_t, Rat>> out;
      if (i < a.rank && j < a.rank) {
        // Cartan commutes
      } else if (i < a.rank) {
        const SRoot r = sroot_of_basis(j);
        const Rat v = a.rd.pos_weight[r.idx][i] * r.sign;
        if (v != 0) out.push_back({j, v});
      } else {
        const SRoot r1 = sroot_of_basis(i);
        const SRoot r2 = sroot_of_basis(j);
        std::vector<long> sum = sroot_alpha(a.rd, r1);
        const auto a2 = sroot_alpha(a.rd, r2);
        bool zero = true;
        for (std::size_t t = 0; t < sum.size(); ++t) {
          sum[t] += a2[t];
          if (sum[t] != 0) zero = false;
        }
        if (zero) {
          // [e_alpha, f_alpha] = h_alpha (coroot); sign order matters
          const int orient = r1.sign;  // +1 when i is the e side
          for (std::size_t t = 0; t < a.rank; ++t) {
            const long k = a.rd.pos_coroot[r1.idx][t];
            if (k != 0) out.push_back({t, Rat(k * orient)});
          }
        } else if (auto sr = a.rd.find_root(sum)) {
          const Rat n = nt.value(r1, r2);
          if (n != 0) {
            const std::size_t target =
                sr->second > 0 ? a.e_index(sr->first) : a.f_index(sr->first);
            out.push_back({target, n});
          }
        }
      }
      set_bracket(i, j, std::move(out));
    }
  }

  a.ad_basis.resize(a.dim);
  for (std::size_t b = 0; b < a.dim; ++b) {
    QMat m(a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
      if (j != b)
        for (const auto& [k, c] : a.brackets[b][j]) m.at(k, j) = c;
    a.ad_basis[b] = std::move(m);
  }

  // Adjoint trace form. On the Cartan K(h_i,h_j) = sum_root a(h_i)a(h_j);
  // root spaces pair only against their opposites, with the value fixed by
  // invariance: K(e,f) = K(h_alpha, h_alpha)/2.
  a.killing = QMat(a.dim, a.dim);
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j) {
      Rat s(0);
      for (std::size_t p = 0; p < a.npos; ++p)
        s += 2 * a.rd.pos_weight[p][i] * a.rd.pos_weight[p][j];
      a.killing.at(i, j) = s;
    }
  for (std::size_t p = 0; p < a.npos; ++p) {
    Rat khh(0);
    for (std::size_t q = 0; q < a.npos; ++q) {
      const Rat v = a.rd.pair_coroot(a.rd.pos_weight[q], p);
      khh += 2 * v * v;
    }
    a.killing.at(a.e_index(p), a.f_index(p)) = khh / 2;
    a.killing.at(a.f_index(p), a.e_index(p)) = khh / 2;
  }

  if (opts.validate) validate_structure(a);
  return a;
}

Element bracket(const ChevalleyAlgebra& a, const Element& x, const Element& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    fail(ErrorKind::DimensionMismatch, "element length vs algebra dimension");
  Element out = a.zero();
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, v] : a.brackets[i][j]) out[k] += c * v;
    }
  }
  return out;
}

Rat invariant_form(const ChevalleyAlgebra& a, const Element& x, const Element& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    fail(ErrorKind::DimensionMismatch, "element length vs algebra dimension");
  return dot(x, mat_apply(a.killing, y));
}

QMat ad_matrix(const ChevalleyAlgebra& a, const Element& x) {
  QMat m(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    if (x[i] != 0) m = mat_add(m, mat_scale(a.ad_basis[i], x[i]));
  return m;
}

void validate_structure(const ChevalleyAlgebra& a) {
  // Antisymmetry of the stored table.
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      const Element xy = bracket(a, a.basis_element(i), a.basis_element(j));
      const Element yx = bracket(a, a.basis_element(j), a.basis_element(i));
      if (!vec_is_zero(vec_add(xy, yx)))
        fail(ErrorKind::NotAutomorphism, "antisymmetry fails on basis pair");
    }
  // Jacobi on every basis triple.
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Element bi = a.basis_element(i);
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      const Element bj = a.basis_element(j);
      const Element bij = bracket(a, bi, bj);
      for (std::size_t k = j + 1; k < a.dim; ++k) {
        const Element bk = a.basis_element(k);
        Element s = bracket(a, bij, bk);
        s = vec_add(s, bracket(a, bracket(a, bj, bk), bi));
        s = vec_add(s, bracket(a, bracket(a, bk, bi), bj));
        if (!vec_is_zero(s))
          fail(ErrorKind::NotAutomorphism, "Jacobi identity fails on basis triple");
      }
    }
  }
  // ad-invariance: K ad_z antisymmetric for every basis z covers all triples.
  for (std::size_t z = 0; z < a.dim; ++z) {
    const QMat kz = mat_mul(a.killing, a.ad_basis[z]);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (kz.at(i, j) + kz.at(j, i) != 0)
          fail(ErrorKind::NotAutomorphism, "form is not ad-invariant on basis triple");
  }
  QMat k = a.killing;
  if (rank(k) != a.dim) fail(ErrorKind::NotAutomorphism, "invariant form is degenerate");
}

bool is_subalgebra(const ChevalleyAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(bracket(a, s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

Subspace normalizer(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& within) {
  if (s.ambient() != a.dim || within.ambient() != a.dim)
    fail(ErrorKind::AmbientMismatch, "normalizer ambient mismatch");
  // x = sum c_k w_k with reduce([w_k, s_j]) linear in c: kernel of the stack.
  QMat sys(0, within.dim());
  sys.cols = within.dim();
  for (std::size_t j = 0; j < s.dim(); ++j) {
    std::vector<QVec> cols;
    for (std::size_t k = 0; k < within.dim(); ++k)
      cols.push_back(s.reduce(bracket(a, within.basis_vector(k), s.basis_vector(j))));
    for (std::size_t row = 0; row < a.dim; ++row) {
      QVec eq(within.dim());
      bool nonzero = false;
      for (std::size_t k = 0; k < within.dim(); ++k) {
        eq[k] = cols[k][row];
        if (eq[k] != 0) nonzero = true;
      }
      if (nonzero) sys.append_row(eq);
    }
  }
  QMat ker = sys.rows == 0 ? QMat::identity(within.dim()) : kernel(sys);
  QMat rows(0, a.dim);
  rows.cols = a.dim;
  for (std::size_t i = 0; i < ker.rows; ++i) {
    QVec v(a.dim, Rat(0));
    for (std::size_t k = 0; k < within.dim(); ++k)
      if (ker.at(i, k) != 0) v = vec_add(v, vec_scale(within.basis_vector(k), ker.at(i, k)));
    rows.append_row(v);
  }
  return Subspace::span(rows, a.dim);
}

Subspace form_orthocomplement(const ChevalleyAlgebra& a, const Subspace& s,
                              const Subspace& within) {
  return orthocomplement(a.killing, s, within);
}

bool is_nilpotent_element(const ChevalleyAlgebra& a, const Element& x) {
  const QMat m = ad_matrix(a, x);
  // iterate images until they stabilize
  QMat img = m;
  std::size_t r = rank(img);
  while (r > 0) {
    img = mat_mul(m, img);
    const std::size_t r2 = rank(img);
    if (r2 == r) return false;
    r = r2;
  }
  return true;
}

NilconeVerdict subspace_in_nilcone(const ChevalleyAlgebra& a, const Subspace& s,
                                   const PolyBudget& budget) {
  NilconeVerdict v;
  if (s.dim() == 0) {
    v.in_nilcone = true;
    return v;
  }
  const std::size_t nv = s.dim();
  PolyMat m(a.dim, std::vector<Poly>(a.dim, Poly(nv)));
  for (std::size_t t = 0; t < nv; ++t) {
    const QMat ad = ad_matrix(a, s.basis_vector(t));
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        if (ad.at(i, j) != 0) {
          Mono mono(nv, 0);
          mono[t] = 1;
          m[i][j].add_term(mono, ad.at(i, j));
        }
  }
  const auto coeffs = charpoly_berkowitz(m, budget);
  for (std::size_t k = 0; k < a.dim; ++k) {
    if (coeffs[k].is_zero()) continue;
    QVec point;
    if (!find_nonvanishing_point(coeffs[k], static_cast<std::uint32_t>(a.dim), point))
      fail(ErrorKind::BudgetExceeded, "witness grid search exhausted unexpectedly");
    Element w = a.zero();
    for (std::size_t t = 0; t < nv; ++t)
      if (point[t] != 0) w = vec_add(w, vec_scale(s.basis_vector(t), point[t]));
    if (is_nilpotent_element(a, w))
      fail(ErrorKind::CriteriaDisagree, "nilcone witness is nilpotent; charpoly bug");
    v.in_nilcone = false;
    v.witness = w;
    return v;
  }
  v.in_nilcone = true;
  return v;
}

Subspace bracket_span(const ChevalleyAlgebra& a, const Subspace& s1, const Subspace& s2) {
  std::vector<QVec> vecs;
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s2.dim(); ++j)
      vecs.push_back(bracket(a, s1.basis_vector(i), s2.basis_vector(j)));
  return Subspace::span_vectors(vecs, a.dim);
}

Subspace centralizer(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& within) {
  QMat sys(0, within.dim());
  sys.cols = within.dim();
  for (std::size_t j = 0; j < s.dim(); ++j) {
    std::vector<Element> cols;
    for (std::size_t k = 0; k < within.dim(); ++k)
      cols.push_back(bracket(a, within.basis_vector(k), s.basis_vector(j)));
    for (std::size_t row = 0; row < a.dim; ++row) {
      QVec eq(within.dim());
      bool nonzero = false;
      for (std::size_t k = 0; k < within.dim(); ++k) {
        eq[k] = cols[k][row];
        if (eq[k] != 0) nonzero = true;
      }
      if (nonzero) sys.append_row(eq);
    }
  }
  QMat ker = sys.rows == 0 ? QMat::identity(within.dim()) : kernel(sys);
  QMat rows(0, a.dim);
  rows.cols = a.dim;
  for (std::size_t i = 0; i < ker.rows; ++i) {
    QVec v(a.dim, Rat(0));
    for (std::size_t k = 0; k < within.dim(); ++k)
      if (ker.at(i, k) != 0) v = vec_add(v, vec_scale(within.basis_vector(k), ker.at(i, k)));
    rows.append_row(v);
  }
  return Subspace::span(rows, a.dim);
}

}  // namespace branchkit
