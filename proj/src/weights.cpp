#include "branchkit/weights.hpp"

#include <algorithm>
#include <deque>

#include "branchkit/errors.hpp"

namespace branchkit {

void WeightCharacter::add(const Weight& w, long m) {
  if (m == 0) return;
  auto it = entries.find(w);
  if (it == entries.end()) {
    entries.emplace(w, m);
  } else {
    it->second += m;
    if (it->second == 0) entries.erase(it);
  }
}

long WeightCharacter::mult(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

long WeightCharacter::mass() const {
  long s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

WeightCharacter tensor_character(const WeightCharacter& c1, const WeightCharacter& c2) {
  WeightCharacter out;
  for (const auto& [w1, m1] : c1.entries)
    for (const auto& [w2, m2] : c2.entries) {
      if (w1.size() != w2.size()) fail(ErrorKind::CoordinateMismatch, "tensor weight lengths");
      out.add(vec_add(w1, w2), m1 * m2);
    }
  return out;
}

WeightCharacter symmetric_power_character(const WeightCharacter& c, unsigned p) {
  // Exact rational intermediates; the result must come out integral.
  std::vector<std::map<Weight, Rat>> h(p + 1);
  const std::size_t n = c.entries.empty() ? 0 : c.entries.begin()->first.size();
  h[0][QVec(n, Rat(0))] = 1;
  for (unsigned d = 1; d <= p; ++d) {
    std::map<Weight, Rat> acc;
    for (unsigned k = 1; k <= d; ++k) {
      for (const auto& [mu, m] : c.entries) {
        const Weight kmu = vec_scale(mu, Rat(static_cast<long>(k)));
        for (const auto& [w, coeff] : h[d - k]) {
          const Rat add = coeff * m;
          if (add == 0) continue;
          acc[vec_add(kmu, w)] += add;
        }
      }
    }
    for (auto& [w, coeff] : acc) {
      coeff /= d;
      if (coeff != 0) h[d][w] = coeff;
    }
  }
  WeightCharacter out;
  for (const auto& [w, coeff] : h[p]) {
    if (!is_integer(coeff))
      fail(ErrorKind::CoordinateMismatch, "symmetric power produced a non-integer multiplicity");
    out.add(w, static_cast<long>(coeff.get_num().get_si()));
  }
  return out;
}

Rat WeightSystem::form(const QVec& a, const QVec& b) const {
  if (a.size() != coord_dim() || b.size() != coord_dim())
    fail(ErrorKind::CoordinateMismatch, "weight length vs weight system");
  return dot(a, mat_apply(gram, b));
}

Rat WeightSystem::pair_coroot(const QVec& mu, const QVec& root) const {
  return 2 * form(mu, root) / form(root, root);
}

bool WeightSystem::is_dominant(const QVec& mu) const {
  for (std::size_t s : simple_indices)
    if (pair_coroot(mu, positive_roots[s]) < 0) return false;
  return true;
}

bool WeightSystem::is_integral(const QVec& mu) const {
  for (std::size_t s : simple_indices)
    if (!is_integer(pair_coroot(mu, positive_roots[s]))) return false;
  return true;
}

WeightSystem weight_system_from_roots(const std::vector<QVec>& positive_roots, const QMat& gram) {
  WeightSystem ws;
  ws.positive_roots = positive_roots;
  ws.gram = gram;
  ws.rho = QVec(gram.rows, Rat(0));
  for (const auto& r : positive_roots) ws.rho = vec_add(ws.rho, r);
  ws.rho = vec_scale(ws.rho, rat(1, 2));
  for (std::size_t i = 0; i < positive_roots.size(); ++i) {
    bool decomposable = false;
    for (std::size_t j = 0; j < positive_roots.size() && !decomposable; ++j)
      for (std::size_t k = j; k < positive_roots.size() && !decomposable; ++k)
        if (vec_add(positive_roots[j], positive_roots[k]) == positive_roots[i])
          decomposable = true;
    if (!decomposable) ws.simple_indices.push_back(i);
  }
  return ws;
}

WeightSystem weight_system_of(const RootDatum& rd) {
  return weight_system_from_roots(rd.pos_weight, rd.weight_form);
}

long weyl_dimension(const WeightSystem& ws, const QVec& lambda) {
  if (!ws.is_dominant(lambda) || !ws.is_integral(lambda))
    fail(ErrorKind::NotDominant, "weight is not dominant integral");
  Rat num(1), den(1);
  const QVec lr = vec_add(lambda, ws.rho);
  for (const auto& a : ws.positive_roots) {
    num *= ws.form(lr, a);
    den *= ws.form(ws.rho, a);
  }
  const Rat d = num / den;
  if (!is_integer(d)) fail(ErrorKind::NotDominant, "Weyl dimension is not an integer");
  return static_cast<long>(d.get_num().get_si());
}

long weyl_dimension(const RootDatum& rd, const QVec& lambda) {
  return weyl_dimension(weight_system_of(rd), lambda);
}

WeightCharacter freudenthal_character(const WeightSystem& ws, const QVec& lambda) {
  if (!ws.is_dominant(lambda) || !ws.is_integral(lambda))
    fail(ErrorKind::NotDominant, "weight is not dominant integral");
  WeightCharacter out;
  out.add(lambda, 1);
  const Rat top = ws.form(vec_add(lambda, ws.rho), vec_add(lambda, ws.rho));
  std::map<Weight, long> known{{lambda, 1}};
  std::deque<Weight> frontier{lambda};
  std::map<Weight, bool> queued{{lambda, true}};
  while (!frontier.empty()) {
    const Weight mu = frontier.front();
    frontier.pop_front();
    for (std::size_t s : ws.simple_indices) {
      const Weight nu = vec_sub(mu, ws.positive_roots[s]);
      if (queued.count(nu)) continue;
      queued[nu] = true;
      // Freudenthal numerator over all strings through nu.
      Rat num(0);
      for (const auto& alpha : ws.positive_roots) {
        Weight up = nu;
        while (true) {
          up = vec_add(up, alpha);
          auto it = known.find(up);
          if (it == known.end()) break;
          num += 2 * it->second * ws.form(up, alpha);
        }
      }
      if (num == 0) continue;  // not a weight of the module
      const QVec nr = vec_add(nu, ws.rho);
      const Rat den = top - ws.form(nr, nr);
      if (den == 0)
        fail(ErrorKind::NotDominant, "Freudenthal denominator vanished on a support weight");
      const Rat m = num / den;
      if (!is_integer(m) || m <= 0)
        fail(ErrorKind::NotDominant, "Freudenthal produced a non-positive multiplicity");
      const long ml = static_cast<long>(m.get_num().get_si());
      known[nu] = ml;
      out.add(nu, ml);
      frontier.push_back(nu);
    }
  }
  return out;
}

WeightCharacter freudenthal_character(const RootDatum& rd, const QVec& lambda) {
  return freudenthal_character(weight_system_of(rd), lambda);
}

DominantConjugate to_dominant(const WeightSystem& ws, const QVec& v) {
  DominantConjugate res;
  res.weight = v;
  while (true) {
    bool changed = false;
    for (std::size_t s : ws.simple_indices) {
      const QVec& alpha = ws.positive_roots[s];
      const Rat c = ws.pair_coroot(res.weight, alpha);
      if (c < 0) {
        res.weight = vec_sub(res.weight, vec_scale(alpha, c));
        res.det = -res.det;
        res.moved = true;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& alpha : ws.positive_roots)
    if (ws.form(res.weight, alpha) == 0) {
      res.regular = false;
      break;
    }
  return res;
}

QVec top_exterior_weight(const ChevalleyAlgebra& a, const Subspace& s, const Subspace& cartan) {
  QVec out(cartan.dim(), Rat(0));
  for (std::size_t b = 0; b < cartan.dim(); ++b) {
    Rat tr(0);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Element br = bracket(a, cartan.basis_vector(b), s.basis_vector(j));
      if (!s.contains(br)) fail(ErrorKind::NotStable, "subspace is not stable under the torus");
      tr += s.coordinates(br)[j];
    }
    out[b] = tr;
  }
  return out;
}

}  // namespace branchkit
