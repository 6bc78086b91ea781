#include "doctest.h"

#include "branchkit/branching.hpp"

using namespace branchkit;

namespace {

struct LadderSetup {
  ChevalleyAlgebra a = build_algebra({{'A', 1}, {'A', 1}});
  SymmetricPair pair;
  ThetaStableParabolic pb;
  DecompVerdict verdict;
  LeviSplit split;
  Subspace qpp;
  LadderSetup() {
    pair = derive_pair(a, sign_involution(a, {-1, -1}), swap_involution(a, 0, 1));
    Element x = a.zero();
    x[0] = 1;
    x[1] = 1;
    pb = parabolic_from_grading(a, pair, x);
    verdict = is_discretely_decomposable(a, pb, pair);
    split = levi_split(a, verdict.qprime, pair);
    qpp = construct_qdoubleprime(a, verdict.qprime, split, pair);
  }
  BranchProblem problem(long l1, long l2) {
    LambdaParam lam = check_lambda(a, pb, pair, {rat(l1), rat(l2)});
    return prepare_branch_problem(a, pb, pair, verdict.qprime, split, lam);
  }
};

struct Su11Setup {
  ChevalleyAlgebra a = build_algebra({{'A', 1}});
  SymmetricPair pair;
  ThetaStableParabolic pb;
  DecompVerdict verdict;
  LeviSplit split;
  Subspace qpp;
  Su11Setup() {
    auto theta = sign_involution(a, {-1});
    pair = derive_pair(a, theta, theta);
    Element x = a.zero();
    x[0] = 1;
    pb = parabolic_from_grading(a, pair, x);
    verdict = is_discretely_decomposable(a, pb, pair);
    split = levi_split(a, verdict.qprime, pair);
    qpp = construct_qdoubleprime(a, verdict.qprime, split, pair);
  }
};

}  // namespace

TEST_CASE("lambda flags on the sl2 Borel") {
  ChevalleyAlgebra a = build_algebra({{'A', 1}});
  auto theta = sign_involution(a, {-1});
  auto pair = derive_pair(a, theta, theta);
  Element x = a.zero();
  x[0] = 1;
  auto pb = parabolic_from_grading(a, pair, x);
  SUBCASE("lambda = 5: linear and weakly fair with margin 6") {
    auto lam = check_lambda(a, pb, pair, {rat(5)});
    CHECK(lam.linear);
    CHECK(lam.unitary_shadow);  // z(l) = span{h} inside k
    CHECK(lam.weakly_fair);
    CHECK(lam.weakly_fair_min == 6);  // <5 + 1, alpha> with (pi, alpha) = 1
    CHECK(lam.good);
  }
  SUBCASE("lambda = 0 is trivially fine") {
    auto lam = check_lambda(a, pb, pair, {rat(0)});
    CHECK(lam.linear);
    CHECK(lam.weakly_fair);
  }
  SUBCASE("lambda = -2 fails weak fairness") {
    auto lam = check_lambda(a, pb, pair, {rat(-2)});
    CHECK_FALSE(lam.weakly_fair);
    CHECK(lam.weakly_fair_min == -1);  // <-2 + 1, alpha> = -1
  }
  SUBCASE("half-integral lambda is not linear") {
    auto lam = check_lambda(a, pb, pair, {rat(1, 2)});
    CHECK_FALSE(lam.linear);
  }
}

TEST_CASE("branch space of the ladder instance") {
  LadderSetup s;
  auto bp = s.problem(2, 3);
  CHECK(bp.bs.lifted.size() == 1);
  CHECK(bp.bs.quotient_weights.size() == 1);
  CHECK(bp.bs.quotient_weights[0] == QVec{rat(2)});  // h_d-weight 2
  CHECK(bp.bs.top_on_acting.size() == bp.bs.acting.dim());
  // scalar shift on h_c = lambda1 + lambda2 + 2
  CHECK(bp.scalar_shift == QVec{rat(7)});
}

TEST_CASE("branch space when sigma is the identity: zero quotient") {
  ChevalleyAlgebra a = build_algebra({{'A', 1}});
  auto pair = derive_pair(a, sign_involution(a, {-1}), identity_involution(a));
  Element x = a.zero();
  x[0] = 1;
  auto pb = parabolic_from_grading(a, pair, x);
  auto v = is_discretely_decomposable(a, pb, pair);
  auto split = levi_split(a, v.qprime, pair);
  auto lam = check_lambda(a, pb, pair, {rat(3)});
  auto bp = prepare_branch_problem(a, pb, pair, v.qprime, split, lam);
  CHECK(bp.bs.lifted.empty());
  auto dd0 = degree_data(bp, 0);
  CHECK(dd0.monomials.size() == 1);
  auto dd2 = degree_data(bp, 2);
  CHECK(dd2.monomials.empty());
}

TEST_CASE("su(1,1) branch space: one-dimensional quotient of weight 2") {
  Su11Setup s;
  auto lam = check_lambda(s.a, s.pb, s.pair, {rat(3)});
  auto bp = prepare_branch_problem(s.a, s.pb, s.pair, s.verdict.qprime, s.split, lam);
  // qbar + g' = span{h, f} so the quotient is the image of e
  CHECK(bp.bs.lifted == std::vector<std::size_t>{1});
  CHECK(bp.bs.quotient_weights[0] == QVec{rat(2)});
}

TEST_CASE("ladder candidates and hom multiplicities reproduce the classical ladder") {
  LadderSetup s;
  auto bp = s.problem(2, 3);
  for (unsigned p = 0; p <= 4; ++p) {
    auto dd = degree_data(bp, p);
    auto cands = enumerate_lambda_candidates(bp, dd);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0] == QVec{rat(7 + 2 * long(p))});
    CHECK(multiplicity_hom(bp, dd, cands[0]) == 1);
    // off-support candidate gives zero
    CHECK(multiplicity_hom(bp, dd, {rat(7 + 2 * long(p) + 4)}) == 0);
    auto euler = multiplicity_euler(bp, dd);
    REQUIRE(euler.count(cands[0]) == 1);
    CHECK(euler[cands[0]].value == 1);
    CHECK_FALSE(euler[cands[0]].sign_mixing);
  }
}

TEST_CASE("ladder branch table for lambda = (2,3)") {
  LadderSetup s;
  auto bp = s.problem(2, 3);
  auto table = branch_table(bp, s.qpp, 4);
  REQUIRE(table.entries.size() == 5);
  for (unsigned p = 0; p <= 4; ++p) {
    const auto& e = table.entries[p];
    CHECK(e.p == p);
    CHECK(e.lambda_prime == QVec{rat(7 + 2 * long(p))});
    CHECK(e.multiplicity == 1);
    CHECK(e.method == "hom+euler");
  }
  CHECK(table.mixing.empty());
}

TEST_CASE("branch table refuses bad hypotheses") {
  LadderSetup s;
  // non-integral lambda on the diagonal torus
  auto lam = check_lambda(s.a, s.pb, s.pair, {rat(1, 2), rat(1)});
  CHECK_FALSE(lam.linear);
  auto bp = prepare_branch_problem(s.a, s.pb, s.pair, s.verdict.qprime, s.split, lam);
  CHECK_THROWS_AS((void)branch_table(bp, s.qpp, 2), Error);
}

TEST_CASE("blattner bound: holomorphic ladder of su(1,1)") {
  Su11Setup s;
  auto lam = check_lambda(s.a, s.pb, s.pair, {rat(3)});
  for (unsigned p = 0; p <= 4; ++p) {
    // K-types at lambda + 2 + 2p, multiplicity one
    CHECK(blattner_bound(s.a, s.pb, s.pair, lam, {rat(5 + 2 * long(p))}, p) == 1);
    CHECK(blattner_bound(s.a, s.pb, s.pair, lam, {rat(5 + 2 * long(p) + 2)}, p) == 0);
    auto c = blattner_character(s.a, s.pb, s.pair, lam, p);
    CHECK(c.mass() == 1);
  }
}

TEST_CASE("blattner equals the weight-expanded branch table when sigma = theta") {
  Su11Setup s;
  auto lam = check_lambda(s.a, s.pb, s.pair, {rat(3)});
  auto bp = prepare_branch_problem(s.a, s.pb, s.pair, s.verdict.qprime, s.split, lam);
  auto table = branch_table(bp, s.qpp, 4);
  // k = span{h} is a torus: lambda' values on h_c = h give weight coordinates
  for (unsigned p = 0; p <= 4; ++p) {
    WeightCharacter branch_side;
    for (const auto& e : table.entries)
      if (e.p == p) branch_side.add(e.lambda_prime, e.multiplicity);
    CHECK(branch_side == blattner_character(s.a, s.pb, s.pair, lam, p));
  }
}

TEST_CASE("weakly-fair annotation for q'' on the ladder") {
  LadderSetup s;
  auto bp = s.problem(1, 1);
  auto table = branch_table(bp, s.qpp, 2);
  for (const auto& e : table.entries) CHECK(e.weakly_fair_for_qdoubleprime);
}
