// Instance files: a single JSON document carries the algebra type, the two
// involutions, the grading element, lambda, and budgets. Parsing failures are
// reported with the offending field path.
#pragma once

#include <cstdint>
#include <string>

#include "branchkit/branching.hpp"

namespace branchkit {

struct InvolutionSpec {
  std::string mode;  // "signs" | "swap" | "matrix" | "identity"
  std::vector<int> simple_signs;  // signs mode, multiplicative shorthand
  std::vector<int> signs;         // signs mode, per positive root
  std::vector<long> root_map;     // signs mode, signed 1-based over positives
  QMat cartan;                    // signs mode, optional Cartan action
  QMat matrix;                    // matrix mode
  std::size_t factor1 = 0, factor2 = 1;  // swap mode
};

struct InstanceData {
  std::vector<SimpleFactor> type;
  InvolutionSpec theta, sigma;
  QVec grading;  // over the Cartan basis h_1..h_r
  QVec lambda;   // over the computed basis of z(l); may be empty for no lambda
  bool has_lambda = false;
  unsigned max_p = 4;
  std::uint64_t seed = 1;
  long module_dim_budget = 5000;
  std::size_t poly_term_budget = 200000;
  bool override_weakly_fair = false;
};

InstanceData parse_instance_text(const std::string& json_text);
InstanceData parse_instance_file(const std::string& path);

struct LoadedInstance {
  ChevalleyAlgebra algebra;
  SymmetricPair pair;
  ThetaStableParabolic parabolic;
  InstanceData data;
  PolyBudget poly_budget;
  ModuleBudget module_budget;
};

LieInvolution build_involution(const ChevalleyAlgebra& a, const InvolutionSpec& spec,
                               const std::string& field);

// Builds and validates everything up to the theta-stable parabolic.
LoadedInstance load_instance(const InstanceData& data);

}  // namespace branchkit
