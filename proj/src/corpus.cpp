#include "branchkit/corpus.hpp"

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

std::string signs_desc(const std::vector<int>& s) {
  std::string d = "signs(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) d += ",";
    d += s[i] > 0 ? "+" : "-";
  }
  return d + ")";
}

std::string grading_desc_of(const std::vector<long>& g) {
  std::string d = "x(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) d += ",";
    d += std::to_string(g[i]);
  }
  return d + ")";
}

}  // namespace

std::string CorpusInstance::id() const {
  return theta_desc + "|" + sigma_desc + "|" + grading_desc;
}

std::vector<std::vector<SimpleFactor>> standard_corpus_types() {
  return {{{'A', 1}}, {{'A', 1}, {'A', 1}}, {{'A', 2}}, {{'B', 2}}, {{'C', 2}}};
}

Corpus generate_corpus(const std::vector<std::vector<SimpleFactor>>& types,
                       const CorpusOptions& opts) {
  Corpus corpus;
  for (const auto& type : types) {
    auto algebra = std::make_shared<ChevalleyAlgebra>(build_algebra(type));
    const std::size_t aidx = corpus.algebras.size();
    corpus.algebras.push_back(algebra);
    const ChevalleyAlgebra& a = *algebra;

    // all sign vectors over the simple roots
    std::vector<std::vector<int>> sign_choices;
    for (std::size_t mask = 0; mask < (std::size_t(1) << a.rank); ++mask) {
      std::vector<int> s(a.rank, 1);
      for (std::size_t i = 0; i < a.rank; ++i)
        if (mask & (std::size_t(1) << i)) s[i] = -1;
      sign_choices.push_back(s);
    }
    std::vector<std::vector<long>> gradings;
    {
      std::vector<long> g(a.rank, -1);
      while (true) {
        gradings.push_back(g);
        std::size_t pos = 0;
        while (pos < a.rank && g[pos] == 1) g[pos++] = -1;
        if (pos == a.rank) break;
        ++g[pos];
      }
    }

    const bool swappable = opts.include_swap && type.size() == 2 &&
                           type[0].family == type[1].family && type[0].rank == type[1].rank;

    for (const auto& ts : sign_choices) {
      const LieInvolution theta = sign_involution(a, ts);
      // sigma choices: sign involutions (all commute with theta)
      for (const auto& ss : sign_choices) {
        if (opts.sigma_equals_theta_only && ss != ts) continue;
        const LieInvolution sigma = sign_involution(a, ss);
        const SymmetricPair pair = derive_pair(a, theta, sigma);
        for (const auto& g : gradings) {
          Element x = a.zero();
          for (std::size_t i = 0; i < a.rank; ++i) x[i] = g[i];
          CorpusInstance ci;
          ci.algebra_index = aidx;
          ci.theta_desc = a.rd.type_string() + ":theta=" + signs_desc(ts);
          ci.sigma_desc = "sigma=" + signs_desc(ss);
          ci.grading_desc = grading_desc_of(g);
          ci.pair = pair;
          ci.grading = x;
          corpus.instances.push_back(std::move(ci));
        }
      }
      // the factor swap needs a symmetric theta to commute
      if (swappable && !opts.sigma_equals_theta_only) {
        bool symmetric = true;
        for (unsigned i = 0; i < type[0].rank; ++i)
          if (ts[i] != ts[type[0].rank + i]) symmetric = false;
        if (symmetric) {
          const LieInvolution sigma = swap_involution(a, 0, 1);
          const SymmetricPair pair = derive_pair(a, theta, sigma);
          for (const auto& g : gradings) {
            Element x = a.zero();
            for (std::size_t i = 0; i < a.rank; ++i) x[i] = g[i];
            // the grading must be theta-fixed; sign thetas fix all of h
            CorpusInstance ci;
            ci.algebra_index = aidx;
            ci.theta_desc = a.rd.type_string() + ":theta=" + signs_desc(ts);
            ci.sigma_desc = "sigma=swap";
            ci.grading_desc = grading_desc_of(g);
            ci.pair = pair;
            ci.grading = x;
            corpus.instances.push_back(std::move(ci));
          }
        }
      }
    }
  }
  return corpus;
}

}  // namespace branchkit
