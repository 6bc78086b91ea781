// Generated instance corpus: for each listed type, every sign involution
// choice of theta and sigma (plus the factor swap where two equal factors
// exist), crossed with every grading vector with coordinates in {-1, 0, 1}.
#pragma once

#include <memory>

#include "branchkit/parabolic.hpp"

namespace branchkit {

struct CorpusInstance {
  std::size_t algebra_index = 0;
  std::string theta_desc, sigma_desc, grading_desc;
  SymmetricPair pair;
  Element grading;
  std::string id() const;
};

struct Corpus {
  std::vector<std::shared_ptr<ChevalleyAlgebra>> algebras;
  std::vector<CorpusInstance> instances;
  const ChevalleyAlgebra& algebra_of(const CorpusInstance& ci) const {
    return *algebras[ci.algebra_index];
  }
};

struct CorpusOptions {
  bool sigma_equals_theta_only = false;  // restrict to sigma = theta instances
  bool include_swap = true;              // add the factor swap sigma where available
};

Corpus generate_corpus(const std::vector<std::vector<SimpleFactor>>& types,
                       const CorpusOptions& opts = {});

// The standard five-type corpus used by the verification suites.
std::vector<std::vector<SimpleFactor>> standard_corpus_types();

}  // namespace branchkit
