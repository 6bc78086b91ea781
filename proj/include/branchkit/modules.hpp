// Explicit irreducible highest-weight modules with exact action matrices.
// The module is the Verma quotient by the radical of the contravariant form:
// weight spaces are spanned by lowering words f_{i1}..f_{ik} v, the form Gram
// matrix is computed by the straightening recursion, and the surviving rank
// of each weight space is the irreducible multiplicity. Works over any
// triangular context: the full algebra or a reductive subalgebra such as l'_c.
#pragma once

#include "branchkit/parabolic.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

struct TriangularContext {
  Subspace algebra;  // acting reductive subalgebra, rows are its basis
  Subspace h_full;   // Cartan subalgebra (weights are value vectors on its rows)
  Subspace center;
  // sl2 triples over the simple roots of the semisimple part
  std::vector<Element> E, F, H;
  QMat cartan_sub;  // C(i,j) = gamma_j(H_i)
  std::vector<QVec> simple_functionals;  // gamma_i on h_full rows
  // full root list for decomposing arbitrary elements
  std::vector<QVec> root_functionals;
  std::vector<Element> root_vectors;
  WeightSystem ws;  // freudenthal/weyl oracle coordinates = h_full value vectors
};

TriangularContext context_from_algebra(const ChevalleyAlgebra& a);
TriangularContext context_from_levi(const ChevalleyAlgebra& a, const LeviSplit& split);

struct IrreducibleModule {
  std::size_t dim = 0;
  QVec highest_weight;            // values on h_full rows
  std::vector<QVec> weight_of;    // per basis vector
  WeightCharacter character;
  std::vector<QMat> action;       // aligned with ctx.algebra basis rows
};

struct ModuleBudget {
  long dim_bound = 5000;
};

// Builds F(lambda) and verifies the character against Freudenthal, the
// dimension against the Weyl formula, and the commutation relations of the
// action matrices. Center components act by the scalars lambda assigns them.
IrreducibleModule construct_irreducible(const ChevalleyAlgebra& a, const TriangularContext& ctx,
                                        const QVec& lambda, const ModuleBudget& budget = {});

// Action of an arbitrary element of ctx.algebra in the module basis.
QMat module_action(const TriangularContext& ctx, const IrreducibleModule& mod, const Element& x);

}  // namespace branchkit
