#include "branchkit/rootdata.hpp"

#include <algorithm>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

// Cartan matrix A(i,j) = <alpha_j, alpha_i^vee> and symmetrizers d_i for one
// simple factor, Bourbaki numbering.
void simple_cartan(char family, unsigned n, QMat& A, QVec& d) {
  auto off_diag = [&](unsigned i, unsigned j, long v) { A.at(i, j) = v; };
  A = QMat(n, n);
  d = QVec(n, Rat(1));
  for (unsigned i = 0; i < n; ++i) A.at(i, i) = 2;
  auto chain = [&](unsigned upto) {
    for (unsigned i = 0; i + 1 < upto; ++i) {
      off_diag(i, i + 1, -1);
      off_diag(i + 1, i, -1);
    }
  };
  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':  // alpha_n short
      if (n < 2) fail(ErrorKind::UnsupportedType, "B requires rank >= 2");
      chain(n - 1);
      off_diag(n - 2, n - 1, -1);
      off_diag(n - 1, n - 2, -2);
      for (unsigned i = 0; i + 1 < n; ++i) d[i] = 2;
      d[n - 1] = 1;
      break;
    case 'C':  // alpha_n long
      if (n < 2) fail(ErrorKind::UnsupportedType, "C requires rank >= 2");
      chain(n - 1);
      off_diag(n - 2, n - 1, -2);
      off_diag(n - 1, n - 2, -1);
      for (unsigned i = 0; i + 1 < n; ++i) d[i] = 1;
      d[n - 1] = 2;
      break;
    case 'D':
      if (n < 3) fail(ErrorKind::UnsupportedType, "D requires rank >= 3");
      chain(n - 1);
      off_diag(n - 3, n - 1, -1);
      off_diag(n - 1, n - 3, -1);
      break;
    case 'E': {
      if (n < 6 || n > 8) fail(ErrorKind::UnsupportedType, "E requires rank 6..8");
      // Bourbaki: node 2 attaches to node 4 of the A-chain 1-3-4-5-...-n.
      std::vector<std::pair<unsigned, unsigned>> edges = {{0, 2}, {2, 3}, {1, 3}};
      for (unsigned i = 3; i + 1 < n; ++i) edges.push_back({i, i + 1});
      for (auto [i, j] : edges) {
        off_diag(i, j, -1);
        off_diag(j, i, -1);
      }
      break;
    }
    case 'F':
      if (n != 4) fail(ErrorKind::UnsupportedType, "F requires rank 4");
      chain(2);
      off_diag(1, 2, -1);
      off_diag(2, 1, -2);
      off_diag(2, 3, -1);
      off_diag(3, 2, -1);
      d[0] = d[1] = 2;
      d[2] = d[3] = 1;
      break;
    case 'G':
      if (n != 2) fail(ErrorKind::UnsupportedType, "G requires rank 2");
      // alpha_1 short, alpha_2 long
      off_diag(0, 1, -3);
      off_diag(1, 0, -1);
      d[0] = 1;
      d[1] = 3;
      break;
    default:
      fail(ErrorKind::UnsupportedType, std::string("unknown family '") + family + "'");
  }
}

long height_of(const std::vector<long>& alpha) {
  long h = 0;
  for (long c : alpha) h += c;
  return h;
}

}  // namespace

std::size_t known_positive_count(char family, unsigned n) {
  switch (family) {
    case 'A': return std::size_t(n) * (n + 1) / 2;
    case 'B':
    case 'C': return std::size_t(n) * n;
    case 'D': return std::size_t(n) * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  fail(ErrorKind::UnsupportedType, "unknown family");
}

std::size_t algebra_dimension(const std::vector<SimpleFactor>& spec) {
  std::size_t dim = 0;
  for (const auto& f : spec) dim += f.rank + 2 * known_positive_count(f.family, f.rank);
  return dim;
}

std::optional<std::pair<std::size_t, int>> RootDatum::find_root(
    const std::vector<long>& alpha) const {
  auto it = root_lookup_.find(alpha);
  if (it != root_lookup_.end()) return std::make_pair(it->second, 1);
  std::vector<long> neg(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
  it = root_lookup_.find(neg);
  if (it != root_lookup_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

long RootDatum::height(std::size_t pos_index) const { return height_of(pos_alpha[pos_index]); }

Rat RootDatum::pair_coroot(const QVec& mu, std::size_t pos_index) const {
  if (mu.size() != rank) fail(ErrorKind::CoordinateMismatch, "weight length");
  Rat s(0);
  const auto& k = pos_coroot[pos_index];
  for (std::size_t i = 0; i < rank; ++i)
    if (k[i] != 0) s += Rat(k[i]) * mu[i];
  return s;
}

Rat RootDatum::form(const QVec& w1, const QVec& w2) const {
  if (w1.size() != rank || w2.size() != rank)
    fail(ErrorKind::CoordinateMismatch, "weight length");
  Rat s(0);
  for (std::size_t i = 0; i < rank; ++i) {
    if (w1[i] == 0) continue;
    for (std::size_t j = 0; j < rank; ++j)
      if (w2[j] != 0) s += w1[i] * weight_form.at(i, j) * w2[j];
  }
  return s;
}

QVec RootDatum::alpha_to_weight(const std::vector<long>& alpha) const {
  QVec w(rank, Rat(0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (alpha[j] != 0) w[i] += cartan.at(i, j) * Rat(alpha[j]);
  return w;
}

bool RootDatum::is_dominant(const QVec& mu) const {
  for (std::size_t i = 0; i < rank; ++i)
    if (mu[i] < 0) return false;
  return true;
}

bool RootDatum::is_integral(const QVec& mu) const {
  for (std::size_t i = 0; i < rank; ++i)
    if (!is_integer(mu[i])) return false;
  return true;
}

std::string RootDatum::type_string() const {
  std::string s;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) s += "x";
    s += type[i].family;
    s += std::to_string(type[i].rank);
  }
  return s;
}

RootDatum build_root_datum(const std::vector<SimpleFactor>& spec) {
  if (spec.empty()) fail(ErrorKind::UnsupportedType, "empty type");
  RootDatum rd;
  rd.type = spec;
  for (const auto& f : spec) rd.rank += f.rank;

  rd.cartan = QMat(rd.rank, rd.rank);
  rd.d = QVec(rd.rank, Rat(1));
  std::size_t off = 0;
  for (std::size_t fi = 0; fi < spec.size(); ++fi) {
    QMat A;
    QVec d;
    simple_cartan(spec[fi].family, spec[fi].rank, A, d);
    for (unsigned i = 0; i < spec[fi].rank; ++i) {
      rd.factor_of_simple.push_back(fi);
      rd.d[off + i] = d[i];
      for (unsigned j = 0; j < spec[fi].rank; ++j) rd.cartan.at(off + i, off + j) = A.at(i, j);
    }
    off += spec[fi].rank;
  }

  // Positive roots by increasing height. beta + alpha_i is a root iff the
  // alpha_i-string through beta satisfies p - <beta, alpha_i^vee> > 0 with
  // p = max{k : beta - k alpha_i is a root}.
  std::vector<std::vector<long>> pool;
  std::map<std::vector<long>, bool> seen;
  off = 0;
  for (std::size_t fi = 0; fi < spec.size(); ++fi) {
    for (unsigned i = 0; i < spec[fi].rank; ++i) {
      std::vector<long> alpha(rd.rank, 0);
      alpha[off + i] = 1;
      pool.push_back(alpha);
      seen[alpha] = true;
    }
    off += spec[fi].rank;
  }
  auto is_known_root = [&](const std::vector<long>& v) {
    if (seen.count(v)) return true;
    std::vector<long> neg(v.size());
    bool nonpos = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      neg[i] = -v[i];
      if (v[i] > 0) nonpos = false;
    }
    return nonpos && seen.count(neg) > 0;
  };
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    const std::vector<long> beta = pool[idx];
    for (std::size_t i = 0; i < rd.rank; ++i) {
      Rat pairing(0);
      for (std::size_t j = 0; j < rd.rank; ++j)
        if (beta[j] != 0) pairing += rd.cartan.at(i, j) * Rat(beta[j]);
      long p = 0;
      std::vector<long> down = beta;
      while (true) {
        down[i] -= 1;
        bool zero = std::all_of(down.begin(), down.end(), [](long c) { return c == 0; });
        if (zero || !is_known_root(down)) break;
        ++p;
      }
      if (Rat(p) - pairing > 0) {
        std::vector<long> up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          pool.push_back(up);
        }
      }
    }
  }
  // Height-major order; the tie-break keeps simple roots in index order.
  std::sort(pool.begin(), pool.end(), [](const std::vector<long>& x, const std::vector<long>& y) {
    const long hx = height_of(x), hy = height_of(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  std::size_t expected = 0;
  for (const auto& f : spec) expected += known_positive_count(f.family, f.rank);
  if (pool.size() != expected)
    fail(ErrorKind::UnsupportedType, "positive root closure has wrong cardinality for " +
                                         rd.type_string());

  rd.pos_alpha = pool;
  for (std::size_t p = 0; p < pool.size(); ++p) {
    rd.root_lookup_[pool[p]] = p;
    rd.pos_weight.push_back(rd.alpha_to_weight(pool[p]));
    Rat len2(0);
    for (std::size_t i = 0; i < rd.rank; ++i)
      for (std::size_t j = 0; j < rd.rank; ++j)
        if (pool[p][i] != 0 && pool[p][j] != 0)
          len2 += Rat(pool[p][i]) * rd.d[i] * rd.cartan.at(i, j) * Rat(pool[p][j]);
    rd.pos_len2.push_back(len2);
    std::vector<long> k(rd.rank, 0);
    for (std::size_t i = 0; i < rd.rank; ++i) {
      Rat ki = Rat(pool[p][i]) * rd.d[i] * 2 / len2;
      if (!is_integer(ki)) fail(ErrorKind::UnsupportedType, "non-integral coroot coefficient");
      k[i] = static_cast<long>(ki.get_num().get_si());
    }
    rd.pos_coroot.push_back(k);
    std::size_t fac = 0;
    for (std::size_t i = 0; i < rd.rank; ++i)
      if (pool[p][i] != 0) fac = rd.factor_of_simple[i];
    rd.factor_of_root.push_back(fac);
  }

  // (pi_i, pi_j) = d_j (A^{-1})_{ji}
  QMat ainv = mat_inverse(rd.cartan);
  rd.weight_form = QMat(rd.rank, rd.rank);
  for (std::size_t i = 0; i < rd.rank; ++i)
    for (std::size_t j = 0; j < rd.rank; ++j) rd.weight_form.at(i, j) = rd.d[j] * ainv.at(j, i);

  return rd;
}

}  // namespace branchkit
