#include "branchkit/modules.hpp"

#include <algorithm>
#include <map>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

using Word = std::vector<std::uint8_t>;

// Contravariant-form pairings between lowering words, by the straightening
// recursion <f_i u, w'> = sum over positions of w' carrying letter i of the
// suffix-weight coefficient times the pairing with the word minus that letter.
class WordPairing {
 public:
  WordPairing(const QMat& cartan_sub, QVec lambda_h) : c_(cartan_sub), lam_(std::move(lambda_h)) {}

  Rat pair(const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) return Rat(0);
    if (w1.empty()) return Rat(1);
    const auto key = std::make_pair(w1, w2);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rat total(0);
    const std::uint8_t i = w1.front();
    const Word tail(w1.begin() + 1, w1.end());
    // suffix weight coefficient: lambda(H_i) - sum_{l>m} C(i, w2_l)
    for (std::size_t m = 0; m < w2.size(); ++m) {
      if (w2[m] != i) continue;
      Rat coeff = lam_[i];
      for (std::size_t l = m + 1; l < w2.size(); ++l) coeff -= c_.at(i, w2[l]);
      if (coeff == 0) continue;
      Word rest;
      rest.reserve(w2.size() - 1);
      rest.insert(rest.end(), w2.begin(), w2.begin() + m);
      rest.insert(rest.end(), w2.begin() + m + 1, w2.end());
      total += coeff * pair(tail, rest);
    }
    memo_.emplace(key, total);
    return total;
  }

  // e_i applied to a lowering word: list of (word-minus-position, coefficient).
  std::vector<std::pair<Word, Rat>> raise(std::uint8_t i, const Word& w) const {
    std::vector<std::pair<Word, Rat>> out;
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (w[m] != i) continue;
      Rat coeff = lam_[i];
      for (std::size_t l = m + 1; l < w.size(); ++l) coeff -= c_.at(i, w[l]);
      if (coeff == 0) continue;
      Word rest;
      rest.reserve(w.size() - 1);
      rest.insert(rest.end(), w.begin(), w.begin() + m);
      rest.insert(rest.end(), w.begin() + m + 1, w.end());
      out.push_back({rest, coeff});
    }
    return out;
  }

 private:
  QMat c_;
  QVec lam_;
  std::map<std::pair<Word, Word>, Rat> memo_;
};

struct WeightSpace {
  std::vector<long> content;  // multiset of letters
  std::vector<Word> basis;    // selected independent words
  QMat gram;                  // Gram on the basis, invertible
  QMat gram_inv;
  std::size_t offset = 0;     // first index in the module basis
};

QVec content_weight(const TriangularContext& ctx, const QVec& lambda,
                    const std::vector<long>& content) {
  QVec w = lambda;
  for (std::size_t i = 0; i < content.size(); ++i)
    if (content[i] != 0)
      w = vec_sub(w, vec_scale(ctx.simple_functionals[i], Rat(content[i])));
  return w;
}

}  // namespace

TriangularContext context_from_algebra(const ChevalleyAlgebra& a) {
  TriangularContext ctx;
  ctx.algebra = Subspace::full(a.dim);
  ctx.h_full = a.cartan_subspace();
  ctx.center = Subspace::zero(a.dim);
  // Simple roots occupy the first `rank` slots of the positive list.
  for (std::size_t i = 0; i < a.rank; ++i) {
    ctx.E.push_back(a.basis_element(a.e_index(i)));
    ctx.F.push_back(a.basis_element(a.f_index(i)));
    ctx.H.push_back(a.basis_element(i));
    ctx.simple_functionals.push_back(a.rd.pos_weight[i]);
  }
  ctx.cartan_sub = QMat(a.rank, a.rank);
  for (std::size_t i = 0; i < a.rank; ++i)
    for (std::size_t j = 0; j < a.rank; ++j)
      ctx.cartan_sub.at(i, j) = ctx.simple_functionals[j][i];
  for (std::size_t p = 0; p < a.npos; ++p) {
    ctx.root_functionals.push_back(a.rd.pos_weight[p]);
    ctx.root_vectors.push_back(a.basis_element(a.e_index(p)));
    ctx.root_functionals.push_back(vec_scale(a.rd.pos_weight[p], rat(-1)));
    ctx.root_vectors.push_back(a.basis_element(a.f_index(p)));
  }
  ctx.ws = weight_system_of(a.rd);
  return ctx;
}

TriangularContext context_from_levi(const ChevalleyAlgebra& a, const LeviSplit& split) {
  TriangularContext ctx;
  ctx.algebra = split.l_c;
  ctx.h_full = split.h_c;
  ctx.center = centralizer(a, split.l_c, split.l_c);
  // simple roots of l_c: indecomposable positives
  std::vector<QVec> pos;
  for (std::size_t idx : split.positive_roots_c) pos.push_back(split.roots_c[idx]);
  for (std::size_t pi = 0; pi < split.positive_roots_c.size(); ++pi) {
    bool decomposable = false;
    for (std::size_t j = 0; j < pos.size() && !decomposable; ++j)
      for (std::size_t k = j; k < pos.size() && !decomposable; ++k)
        if (vec_add(pos[j], pos[k]) == pos[pi]) decomposable = true;
    if (decomposable) continue;
    const std::size_t ridx = split.positive_roots_c[pi];
    const QVec gamma = split.roots_c[ridx];
    const Element X = split.root_vectors_c[ridx];
    const QVec neg = vec_scale(gamma, rat(-1));
    auto nit = std::find(split.roots_c.begin(), split.roots_c.end(), neg);
    if (nit == split.roots_c.end())
      fail(ErrorKind::DegenerateSplit, "missing opposite root in l'_c");
    const Element Y = split.root_vectors_c[std::size_t(nit - split.roots_c.begin())];
    const Element Ht = bracket(a, X, Y);
    const Rat c = dot(gamma, split.h_c.coordinates(Ht));
    if (c == 0) fail(ErrorKind::DegenerateSplit, "degenerate sl2 triple in l'_c");
    ctx.E.push_back(X);
    ctx.F.push_back(vec_scale(Y, 2 / c));
    ctx.H.push_back(vec_scale(Ht, 2 / c));
    ctx.simple_functionals.push_back(gamma);
  }
  const std::size_t m = ctx.E.size();
  ctx.cartan_sub = QMat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const QVec hi = split.h_c.coordinates(ctx.H[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const Rat v = dot(ctx.simple_functionals[j], hi);
      if (!is_integer(v)) fail(ErrorKind::DegenerateSplit, "non-integral Cartan pairing in l'_c");
      ctx.cartan_sub.at(i, j) = v;
    }
  }
  for (std::size_t i = 0; i < split.roots_c.size(); ++i) {
    ctx.root_functionals.push_back(split.roots_c[i]);
    ctx.root_vectors.push_back(split.root_vectors_c[i]);
  }
  // invariant-form Gram on h_c, dualized for the weight-space form
  QMat gram(split.h_c.dim(), split.h_c.dim());
  for (std::size_t i = 0; i < split.h_c.dim(); ++i)
    for (std::size_t j = 0; j < split.h_c.dim(); ++j)
      gram.at(i, j) = invariant_form(a, split.h_c.basis_vector(i), split.h_c.basis_vector(j));
  std::vector<QVec> posf;
  for (std::size_t idx : split.positive_roots_c) posf.push_back(split.roots_c[idx]);
  ctx.ws = weight_system_from_roots(posf, mat_inverse(gram));
  return ctx;
}

IrreducibleModule construct_irreducible(const ChevalleyAlgebra& a, const TriangularContext& ctx,
                                        const QVec& lambda, const ModuleBudget& budget) {
  if (lambda.size() != ctx.h_full.dim())
    fail(ErrorKind::BasisMismatch, "highest weight length vs Cartan basis");
  const std::size_t m = ctx.E.size();
  QVec lam_h(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    lam_h[i] = dot(lambda, ctx.h_full.coordinates(ctx.H[i]));
    if (!is_integer(lam_h[i]) || lam_h[i] < 0)
      fail(ErrorKind::NotDominant, "highest weight is not dominant integral");
  }
  if (m > 0) {
    const long est = weyl_dimension(ctx.ws, lambda);
    if (est > budget.dim_bound)
      fail(ErrorKind::DimensionBound,
           "estimated module dimension " + std::to_string(est) + " exceeds budget");
  }

  WordPairing wp(ctx.cartan_sub, lam_h);
  std::map<std::vector<long>, WeightSpace> spaces;
  {
    WeightSpace top;
    top.content.assign(m, 0);
    top.basis = {Word{}};
    top.gram = QMat::identity(1);
    top.gram_inv = QMat::identity(1);
    spaces.emplace(top.content, top);
  }
  std::vector<std::vector<long>> frontier = {std::vector<long>(m, 0)};
  long total = 1;
  while (!frontier.empty()) {
    // candidate contents one level down
    std::vector<std::vector<long>> next_contents;
    for (const auto& c : frontier)
      for (std::size_t i = 0; i < m; ++i) {
        auto c2 = c;
        ++c2[i];
        if (std::find(next_contents.begin(), next_contents.end(), c2) == next_contents.end())
          next_contents.push_back(c2);
      }
    std::vector<std::vector<long>> survived;
    for (const auto& c2 : next_contents) {
      // candidate words: letter i prepended to basis words one step up
      std::vector<Word> cand;
      for (std::size_t i = 0; i < m; ++i) {
        if (c2[i] == 0) continue;
        auto up = c2;
        --up[i];
        auto it = spaces.find(up);
        if (it == spaces.end()) continue;
        for (const Word& w : it->second.basis) {
          Word nw;
          nw.reserve(w.size() + 1);
          nw.push_back(static_cast<std::uint8_t>(i));
          nw.insert(nw.end(), w.begin(), w.end());
          cand.push_back(nw);
        }
      }
      if (cand.empty()) continue;
      QMat gram(cand.size(), cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i; j < cand.size(); ++j) {
          gram.at(i, j) = wp.pair(cand[i], cand[j]);
          gram.at(j, i) = gram.at(i, j);
        }
      QMat red = gram;
      const auto piv = rref(red);
      if (piv.empty()) continue;
      WeightSpace spc;
      spc.content = c2;
      for (auto p : piv) spc.basis.push_back(cand[p]);
      spc.gram = QMat(piv.size(), piv.size());
      for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < piv.size(); ++j)
          spc.gram.at(i, j) = gram.at(piv[i], piv[j]);
      spc.gram_inv = mat_inverse(spc.gram);
      total += static_cast<long>(piv.size());
      if (total > budget.dim_bound) fail(ErrorKind::DimensionBound, "module dimension budget");
      spaces.emplace(c2, spc);
      survived.push_back(c2);
    }
    frontier = survived;
  }

  IrreducibleModule mod;
  mod.highest_weight = lambda;
  for (auto& [c, spc] : spaces) {
    spc.offset = mod.dim;
    mod.dim += spc.basis.size();
    const QVec w = content_weight(ctx, lambda, c);
    for (std::size_t i = 0; i < spc.basis.size(); ++i) mod.weight_of.push_back(w);
    mod.character.add(w, static_cast<long>(spc.basis.size()));
  }

  // coordinates of an arbitrary word in the basis of its weight space
  auto coords_of_word = [&](const WeightSpace& spc, const Word& w) {
    QVec rhs(spc.basis.size());
    for (std::size_t i = 0; i < spc.basis.size(); ++i) rhs[i] = wp.pair(spc.basis[i], w);
    return mat_apply(spc.gram_inv, rhs);
  };

  // raising and lowering matrices over the simple triples
  std::vector<QMat> ef_mats(m, QMat(mod.dim, mod.dim)), ee_mats(m, QMat(mod.dim, mod.dim));
  for (const auto& [c, spc] : spaces) {
    for (std::size_t bi = 0; bi < spc.basis.size(); ++bi) {
      const Word& w = spc.basis[bi];
      for (std::size_t i = 0; i < m; ++i) {
        // f_i: prepend letter i
        auto down = c;
        ++down[i];
        auto dit = spaces.find(down);
        if (dit != spaces.end()) {
          Word nw;
          nw.push_back(static_cast<std::uint8_t>(i));
          nw.insert(nw.end(), w.begin(), w.end());
          const QVec co = coords_of_word(dit->second, nw);
          for (std::size_t r = 0; r < co.size(); ++r)
            if (co[r] != 0) ef_mats[i].at(dit->second.offset + r, spc.offset + bi) = co[r];
        }
        // e_i
        if (c[i] > 0) {
          auto up = c;
          --up[i];
          auto uit = spaces.find(up);
          if (uit != spaces.end()) {
            QVec acc(uit->second.basis.size(), Rat(0));
            for (const auto& [uw, coeff] : wp.raise(static_cast<std::uint8_t>(i), w)) {
              const QVec co = coords_of_word(uit->second, uw);
              for (std::size_t r = 0; r < co.size(); ++r) acc[r] += coeff * co[r];
            }
            for (std::size_t r = 0; r < acc.size(); ++r)
              if (acc[r] != 0) ee_mats[i].at(uit->second.offset + r, spc.offset + bi) = acc[r];
          }
        }
      }
    }
  }

  // action of every root vector, lifted from the simple triples by brackets
  std::map<QVec, QMat> root_action;
  {
    // express root functionals in simple coordinates to order by height
    const std::size_t nr = ctx.root_functionals.size();
    QMat simple_cols(lambda.size(), m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < lambda.size(); ++r)
        simple_cols.at(r, j) = ctx.simple_functionals[j][r];
    std::vector<std::pair<long, std::size_t>> order;
    std::vector<QVec> simple_coords(nr);
    for (std::size_t i = 0; i < nr; ++i) {
      bool ok = false;
      simple_coords[i] = solve(simple_cols, ctx.root_functionals[i], ok);
      if (!ok) fail(ErrorKind::DegenerateSplit, "root outside the simple-root lattice");
      long h = 0;
      for (const auto& v : simple_coords[i]) {
        if (!is_integer(v)) fail(ErrorKind::DegenerateSplit, "non-integral root coordinates");
        h += static_cast<long>(v.get_num().get_si());
      }
      order.push_back({h, i});
    }
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      return std::abs(x.first) < std::abs(y.first);
    });
    for (const auto& [h, i] : order) {
      const QVec& gamma = ctx.root_functionals[i];
      const Element& X = ctx.root_vectors[i];
      if (std::abs(h) == 1) {
        // match against a simple triple
        bool done = false;
        for (std::size_t s = 0; s < m && !done; ++s) {
          if (gamma == ctx.simple_functionals[s]) {
            // X may be a scalar multiple of E_s
            const QVec ce = ctx.algebra.coordinates(ctx.E[s]);
            const QVec cx = ctx.algebra.coordinates(X);
            for (std::size_t t = 0; t < ce.size(); ++t)
              if (ce[t] != 0) {
                root_action[gamma] = mat_scale(ee_mats[s], cx[t] / ce[t]);
                done = true;
                break;
              }
          } else if (gamma == vec_scale(ctx.simple_functionals[s], rat(-1))) {
            const QVec cf = ctx.algebra.coordinates(ctx.F[s]);
            const QVec cx = ctx.algebra.coordinates(X);
            for (std::size_t t = 0; t < cf.size(); ++t)
              if (cf[t] != 0) {
                root_action[gamma] = mat_scale(ef_mats[s], cx[t] / cf[t]);
                done = true;
                break;
              }
          }
        }
        if (!done) fail(ErrorKind::DegenerateSplit, "height-one root is not simple");
        continue;
      }
      // peel one simple root off gamma
      bool done = false;
      for (std::size_t s = 0; s < m && !done; ++s) {
        const QVec step = h > 0 ? ctx.simple_functionals[s]
                                : vec_scale(ctx.simple_functionals[s], rat(-1));
        const QVec delta = vec_sub(gamma, step);
        auto dit = std::find(ctx.root_functionals.begin(), ctx.root_functionals.end(), delta);
        if (dit == ctx.root_functionals.end()) continue;
        const std::size_t di = std::size_t(dit - ctx.root_functionals.begin());
        if (!root_action.count(delta)) continue;
        const Element& gen = h > 0 ? ctx.E[s] : ctx.F[s];
        const Element br = bracket(a, gen, ctx.root_vectors[di]);
        // br = c X
        Rat c(0);
        for (std::size_t t = 0; t < br.size(); ++t)
          if (X[t] != 0) {
            c = br[t] / X[t];
            break;
          }
        if (c == 0) continue;
        if (br != vec_scale(X, c)) fail(ErrorKind::DegenerateSplit, "root space not aligned");
        const QMat gen_mat = h > 0 ? ee_mats[s] : ef_mats[s];
        const QMat delta_mat = root_action[delta];
        root_action[gamma] =
            mat_scale(mat_sub(mat_mul(gen_mat, delta_mat), mat_mul(delta_mat, gen_mat)), 1 / c);
        done = true;
      }
      if (!done) fail(ErrorKind::DegenerateSplit, "could not lift root vector action");
    }
  }

  // assemble matrices for every basis row of ctx.algebra
  QMat decomp_cols(ctx.algebra.ambient(), ctx.h_full.dim() + ctx.root_vectors.size());
  for (std::size_t j = 0; j < ctx.h_full.dim(); ++j)
    for (std::size_t r = 0; r < ctx.algebra.ambient(); ++r)
      decomp_cols.at(r, j) = ctx.h_full.basis_vector(j)[r];
  for (std::size_t j = 0; j < ctx.root_vectors.size(); ++j)
    for (std::size_t r = 0; r < ctx.algebra.ambient(); ++r)
      decomp_cols.at(r, ctx.h_full.dim() + j) = ctx.root_vectors[j][r];
  for (std::size_t b = 0; b < ctx.algebra.dim(); ++b) {
    bool ok = false;
    const QVec co = solve(decomp_cols, ctx.algebra.basis_vector(b), ok);
    if (!ok) fail(ErrorKind::BasisMismatch, "algebra element outside Cartan + root spaces");
    QMat mat(mod.dim, mod.dim);
    // Cartan part acts diagonally by the weight
    for (std::size_t idx = 0; idx < mod.dim; ++idx) {
      Rat val(0);
      for (std::size_t j = 0; j < ctx.h_full.dim(); ++j)
        if (co[j] != 0) {
          // weight value on h_full basis vector j scaled by coefficient
          val += co[j] * mod.weight_of[idx][j];
        }
      mat.at(idx, idx) = val;
    }
    for (std::size_t j = 0; j < ctx.root_vectors.size(); ++j)
      if (co[ctx.h_full.dim() + j] != 0)
        mat = mat_add(mat, mat_scale(root_action[ctx.root_functionals[j]],
                                     co[ctx.h_full.dim() + j]));
    mod.action.push_back(std::move(mat));
  }

  // verification: character, dimension, bracket relations
  if (m > 0) {
    const WeightCharacter oracle = freudenthal_character(ctx.ws, lambda);
    if (!(oracle == mod.character))
      fail(ErrorKind::EqualityViolated, "module character differs from Freudenthal");
    if (static_cast<long>(mod.dim) != weyl_dimension(ctx.ws, lambda))
      fail(ErrorKind::EqualityViolated, "module dimension differs from the Weyl formula");
  }
  for (std::size_t i = 0; i < ctx.algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < ctx.algebra.dim(); ++j) {
      const Element br = bracket(a, ctx.algebra.basis_vector(i), ctx.algebra.basis_vector(j));
      const QVec co = ctx.algebra.coordinates(br);
      QMat expect(mod.dim, mod.dim);
      for (std::size_t t = 0; t < co.size(); ++t)
        if (co[t] != 0) expect = mat_add(expect, mat_scale(mod.action[t], co[t]));
      const QMat got = mat_sub(mat_mul(mod.action[i], mod.action[j]),
                               mat_mul(mod.action[j], mod.action[i]));
      if (!(got == expect))
        fail(ErrorKind::EqualityViolated, "action matrices violate a bracket relation");
    }
  return mod;
}

QMat module_action(const TriangularContext& ctx, const IrreducibleModule& mod, const Element& x) {
  const QVec co = ctx.algebra.coordinates(x);
  QMat mat(mod.dim, mod.dim);
  for (std::size_t t = 0; t < co.size(); ++t)
    if (co[t] != 0) mat = mat_add(mat, mat_scale(mod.action[t], co[t]));
  return mat;
}

}  // namespace branchkit
