#include "branchkit/report.hpp"

#include <chrono>
#include <iostream>

#include "branchkit/assvar.hpp"
#include "branchkit/corpus.hpp"
#include "branchkit/instance.hpp"
#include "json.hpp"

namespace branchkit {

namespace {

using nlohmann::json;

json vec_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

json mat_json(const QMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

json subspace_json(const Subspace& s) {
  json out;
  out["dim"] = s.dim();
  out["basis"] = mat_json(s.basis());
  return out;
}

json algebra_json(const ChevalleyAlgebra& a) {
  json out;
  json type = json::array();
  for (const auto& f : a.rd.type) type.push_back({std::string(1, f.family), f.rank});
  out["cartan_type"] = type;
  out["dim"] = a.dim;
  out["rank"] = a.rank;
  out["positive_roots"] = a.npos;
  out["basis_labels"] = a.basis_labels;
  out["sign_convention"] = a.sign_convention;
  json triples = json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      for (const auto& [k, c] : a.brackets[i][j])
        triples.push_back({i, j, k, rat_str(c)});
  out["structure_constants"] = triples;
  out["invariant_form"] = mat_json(a.killing);
  return out;
}

json instance_echo(const LoadedInstance& li) {
  json out;
  json type = json::array();
  for (const auto& f : li.data.type) type.push_back({std::string(1, f.family), f.rank});
  out["algebra"] = type;
  out["theta_mode"] = li.data.theta.mode;
  out["sigma_mode"] = li.data.sigma.mode;
  out["grading"] = vec_json(li.data.grading);
  if (li.data.has_lambda) out["lambda"] = vec_json(li.data.lambda);
  out["max_p"] = li.data.max_p;
  out["seed"] = li.data.seed;
  out["budgets"] = {{"module_dim", li.data.module_dim_budget},
                    {"poly_terms", li.data.poly_term_budget}};
  out["sign_convention"] = li.algebra.sign_convention;
  return out;
}

json report_head(const std::string& command, const LoadedInstance& li) {
  json rep;
  rep["schema"] = kSchemaVersion;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  rep["command"] = command;
  rep["instance"] = instance_echo(li);
  return rep;
}

json lambda_json(const LambdaParam& lam) {
  json out;
  out["z_l_basis"] = mat_json(lam.z_l.basis());
  out["coords"] = vec_json(lam.lambda);
  out["lambda_tilde"] = vec_json(lam.lambda_tilde);
  out["linear"] = lam.linear;
  out["unitary_shadow"] = lam.unitary_shadow;
  out["weakly_fair"] = lam.weakly_fair;
  out["good"] = lam.good;
  if (!lam.weakly_fair_argmin.empty()) {
    out["weakly_fair_min"] = rat_str(lam.weakly_fair_min);
    out["weakly_fair_argmin"] = vec_json(lam.weakly_fair_argmin);
    out["good_min"] = rat_str(lam.good_min);
    out["good_argmin"] = vec_json(lam.good_argmin);
  }
  return out;
}

struct BranchRun {
  DecompVerdict verdict;
  LeviSplit split;
  Subspace qpp;
  LambdaParam lam;
  BranchProblem problem;
};

// Everything cmd_branch and the oracle need, with the hypothesis gates applied.
BranchRun prepare_run(const LoadedInstance& li) {
  if (!is_sigma_open(li.algebra, li.parabolic, li.pair))
    fail(ErrorKind::HypothesisViolated, "q is not sigma-open");
  BranchRun run;
  run.verdict = is_discretely_decomposable(li.algebra, li.parabolic, li.pair, li.poly_budget);
  if (!run.verdict.decomposable)
    fail(ErrorKind::HypothesisViolated, "instance is not discretely decomposable");
  run.split = levi_split(li.algebra, run.verdict.qprime, li.pair);
  run.qpp = construct_qdoubleprime(li.algebra, run.verdict.qprime, run.split, li.pair,
                                   li.poly_budget);
  if (!li.data.has_lambda)
    fail(ErrorKind::ParseError, "lambda: missing (required for this command)");
  run.lam = check_lambda(li.algebra, li.parabolic, li.pair, li.data.lambda);
  run.problem = prepare_branch_problem(li.algebra, li.parabolic, li.pair, run.verdict.qprime,
                                       run.split, run.lam);
  return run;
}

json cmd_validate(const LoadedInstance& li) {
  json rep = report_head("validate", li);
  rep["algebra"] = algebra_json(li.algebra);
  rep["pair"] = {{"dim_k", li.pair.k.dim()},
                 {"dim_p", li.pair.p.dim()},
                 {"dim_gprime", li.pair.gprime.dim()},
                 {"dim_kprime", li.pair.kprime.dim()},
                 {"dim_pprime", li.pair.pprime.dim()}};
  rep["parabolic"] = {{"dim_q", li.parabolic.q.dim()},
                      {"dim_l", li.parabolic.l.dim()},
                      {"dim_u", li.parabolic.u.dim()},
                      {"s_dim", li.parabolic.s_dim},
                      {"two_rho_u", vec_json(li.parabolic.two_rho_u)}};
  if (li.data.has_lambda)
    rep["lambda"] = lambda_json(check_lambda(li.algebra, li.parabolic, li.pair, li.data.lambda));
  rep["valid"] = true;
  return rep;
}

json cmd_check(const LoadedInstance& li) {
  json rep = report_head("check", li);
  const bool open = is_sigma_open(li.algebra, li.parabolic, li.pair);
  rep["sigma_open"] = open;
  if (!open) {
    rep["decomposable"] = nullptr;
    return rep;
  }
  const DecompVerdict v =
      is_discretely_decomposable(li.algebra, li.parabolic, li.pair, li.poly_budget);
  rep["decomposable"] = v.decomposable;
  json crit;
  crit["nilcone"] = {{"computed", v.nilcone_computed}, {"holds", v.nilcone_criterion}};
  if (!v.nilcone_criterion && v.nilcone_computed) crit["nilcone"]["witness"] = vec_json(v.witness);
  crit["qprime"] = {{"certified", v.qprime.certified}};
  if (!v.qprime.certified) crit["qprime"]["reason"] = v.qprime.reason;
  rep["criteria"] = crit;
  rep["qprime"] = subspace_json(v.qprime.qprime);
  return rep;
}

json split_json(const LeviSplit& split) {
  json out;
  out["l_c"] = subspace_json(split.l_c);
  out["l_n"] = subspace_json(split.l_n);
  out["h_c"] = subspace_json(split.h_c);
  json ideals = json::array();
  for (std::size_t i = 0; i < split.simple_ideals.size(); ++i)
    ideals.push_back({{"dim", split.simple_ideals[i].dim()},
                      {"compact", static_cast<bool>(split.ideal_compact[i])}});
  out["simple_ideals"] = ideals;
  out["borel_c"] = subspace_json(split.borel_c);
  json pos = json::array();
  for (std::size_t i : split.positive_roots_c) pos.push_back(vec_json(split.roots_c[i]));
  out["positive_roots_c"] = pos;
  return out;
}

json cmd_construct(const LoadedInstance& li) {
  json rep = report_head("construct", li);
  if (!is_sigma_open(li.algebra, li.parabolic, li.pair))
    fail(ErrorKind::HypothesisViolated, "q is not sigma-open");
  const DecompVerdict v =
      is_discretely_decomposable(li.algebra, li.parabolic, li.pair, li.poly_budget);
  if (!v.decomposable)
    fail(ErrorKind::HypothesisViolated, "instance is not discretely decomposable");
  const LeviSplit split = levi_split(li.algebra, v.qprime, li.pair);
  const Subspace qpp =
      construct_qdoubleprime(li.algebra, v.qprime, split, li.pair, li.poly_budget);
  rep["qprime"] = subspace_json(v.qprime.qprime);
  rep["nilradical"] = subspace_json(v.qprime.nilradical);
  rep["levi"] = subspace_json(v.qprime.levi);
  rep["levi_split"] = split_json(split);
  rep["qdoubleprime"] = subspace_json(qpp);
  return rep;
}

json table_json(const MultiplicityTable& table) {
  json rows = json::array();
  for (const auto& e : table.entries)
    rows.push_back({{"lambda_prime", vec_json(e.lambda_prime)},
                    {"p", e.p},
                    {"multiplicity", e.multiplicity},
                    {"method", e.method},
                    {"weakly_fair_for_qdoubleprime", e.weakly_fair_for_qdoubleprime}});
  json out;
  out["max_p"] = table.max_p;
  out["rows"] = rows;
  json mixing = json::array();
  for (const auto& [p, lp] : table.mixing) mixing.push_back({{"p", p}, {"lambda_prime", vec_json(lp)}});
  out["sign_mixing_cells"] = mixing;
  return out;
}

json cmd_branch(const LoadedInstance& li) {
  json rep = report_head("branch", li);
  BranchRun run = prepare_run(li);
  rep["lambda"] = lambda_json(run.lam);
  rep["qprime"] = subspace_json(run.verdict.qprime.qprime);
  rep["qdoubleprime"] = subspace_json(run.qpp);
  rep["levi_split"] = split_json(run.split);
  BranchOptions opts;
  opts.override_weakly_fair = li.data.override_weakly_fair;
  opts.module_budget = li.module_budget;
  const MultiplicityTable table = branch_table(run.problem, run.qpp, li.data.max_p, opts);
  rep["table"] = table_json(table);
  json cands = json::array();
  for (unsigned p = 0; p <= li.data.max_p; ++p) {
    const DegreeData dd = degree_data(run.problem, p);
    json c = json::array();
    for (const auto& lp : enumerate_lambda_candidates(run.problem, dd)) c.push_back(vec_json(lp));
    cands.push_back({{"p", p}, {"candidates", c}});
  }
  rep["lambda_candidates"] = cands;
  return rep;
}

json cmd_blattner(const LoadedInstance& li) {
  json rep = report_head("blattner", li);
  if (!li.data.has_lambda) fail(ErrorKind::ParseError, "lambda: missing");
  const LambdaParam lam = check_lambda(li.algebra, li.parabolic, li.pair, li.data.lambda);
  rep["lambda"] = lambda_json(lam);
  json rows = json::array();
  for (unsigned p = 0; p <= li.data.max_p; ++p) {
    const WeightCharacter c = blattner_character(li.algebra, li.parabolic, li.pair, lam, p);
    for (const auto& [mu, mult] : c.entries) {
      if (!blattner_dominant(li.algebra, li.parabolic, li.pair, mu)) continue;
      rows.push_back({{"mu", vec_json(mu)}, {"p", p}, {"multiplicity", mult}});
    }
  }
  rep["table"] = rows;
  return rep;
}

json assvar_json(const AssvarReport& rep) {
  json out;
  out["dim_assvar_g"] = rep.k_saturation.dimension;
  out["dim_assvar_gprime"] = rep.kprime_saturation.dimension;
  out["projection_equal"] = rep.projection.all_equal();
  out["density_match"] = rep.density_match;
  out["pr_u_cap_p"] = subspace_json(rep.projection.pr_u_p);
  out["witnesses"] = {{"k_saturation", vec_json(rep.k_saturation.witness_point)},
                      {"kprime_saturation", vec_json(rep.kprime_saturation.witness_point)},
                      {"samples_tried", rep.k_saturation.samples_tried}};
  return out;
}

json cmd_assvar(const LoadedInstance& li, int& exit_code) {
  json rep = report_head("assvar", li);
  if (!is_sigma_open(li.algebra, li.parabolic, li.pair))
    fail(ErrorKind::HypothesisViolated, "q is not sigma-open");
  const DecompVerdict v =
      is_discretely_decomposable(li.algebra, li.parabolic, li.pair, li.poly_budget);
  if (!v.decomposable)
    fail(ErrorKind::HypothesisViolated, "instance is not discretely decomposable");
  const LeviSplit split = levi_split(li.algebra, v.qprime, li.pair);
  const Subspace qpp =
      construct_qdoubleprime(li.algebra, v.qprime, split, li.pair, li.poly_budget);
  const AssvarReport ar =
      assvar_report(li.algebra, li.parabolic, li.pair, v.qprime, qpp, li.data.seed);
  rep["assvar"] = assvar_json(ar);
  if (!ar.projection.all_equal() || !ar.density_match) exit_code = 3;
  return rep;
}

// Cross-check suite; every entry is pass/fail report content.
json cmd_oracle(const LoadedInstance& li, int& exit_code) {
  json rep = report_head("oracle", li);
  json checks = json::array();
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) exit_code = 3;
  };

  try {
    validate_structure(li.algebra);
    add("structure", true, "antisymmetry, Jacobi, invariance on all basis triples");
  } catch (const Error& e) {
    add("structure", false, e.what());
  }

  {
    const QMat pr2 = mat_mul(li.pair.pr_matrix, li.pair.pr_matrix);
    add("projection-idempotent", pr2 == li.pair.pr_matrix, "pr . pr = pr");
  }

  const bool open = is_sigma_open(li.algebra, li.parabolic, li.pair);
  add("sigma-open", true, open ? "open" : "not open (downstream checks skipped)");

  if (open) {
    try {
      const DecompVerdict v =
          is_discretely_decomposable(li.algebra, li.parabolic, li.pair, li.poly_budget);
      add("criteria-agreement", true,
          v.nilcone_computed ? "nilcone and parabolicity criteria agree"
                             : "nilcone budget exhausted; parabolicity only");
      if (v.decomposable) {
        const LeviSplit split = levi_split(li.algebra, v.qprime, li.pair);
        const Subspace qpp =
            construct_qdoubleprime(li.algebra, v.qprime, split, li.pair, li.poly_budget);
        // Levi decomposition identities
        const Subspace lhs = li.parabolic.q.intersect(li.pair.gprime);
        const Subspace rhs =
            li.parabolic.q.intersect(split.l_c).sum(split.l_n).sum(v.qprime.nilradical);
        add("q-cap-gprime-decomposition", lhs == rhs, "q cap g' = (q cap l'_c) + l'_n + u'");
        const Subspace lnu = split.l_n.sum(v.qprime.nilradical);
        add("bracket-containment",
            li.parabolic.q.sum(li.pair.gprime)
                .contains(bracket_span(li.algebra, lnu, Subspace::full(li.algebra.dim))),
            "[(l'_n + u'), g] inside q + g'");
        const Subspace barq = apply_linear_map(li.pair.bar_matrix, v.qprime.qprime);
        add("qbar-inside-barqprime",
            barq.contains(li.parabolic.qbar.intersect(li.pair.gprime)),
            "qbar cap g' inside bar(q')");
        const Subspace pr_up = project(li.algebra, li.pair, li.parabolic.u.intersect(li.pair.p));
        add("projection-formula",
            pr_up == orthocomplement(li.algebra.killing,
                                     li.parabolic.q.intersect(li.pair.pprime), li.pair.pprime),
            "pr(u cap p) = (q cap p')^{perp p'}");
        const ProjectionEquality pe =
            projection_equality_check(li.algebra, li.parabolic, li.pair, v.qprime, qpp);
        add("projection-equality", pe.all_equal(),
            "pr(u cap p) = u' cap p' = u'' cap p' and the bar side");
        const AssvarReport ar =
            assvar_report(li.algebra, li.parabolic, li.pair, v.qprime, qpp, li.data.seed);
        add("density-shadow", ar.density_match,
            "dim k'-saturation = dim k-saturation of ubar cap p");

        if (li.data.has_lambda) {
          const LambdaParam lam =
              check_lambda(li.algebra, li.parabolic, li.pair, li.data.lambda);
          if (lam.linear && lam.unitary_shadow && lam.weakly_fair) {
            BranchProblem bp = prepare_branch_problem(li.algebra, li.parabolic, li.pair,
                                                      v.qprime, split, lam);
            BranchOptions opts;
            opts.module_budget = li.module_budget;
            const unsigned cap = std::min(li.data.max_p, 4u);
            try {
              const MultiplicityTable table = branch_table(bp, qpp, cap, opts);
              add("hom-euler-agreement", true,
                  std::to_string(table.mixing.size()) + " sign-mixing cells at p <= " +
                      std::to_string(cap));
              // mass identity diagnostics
              std::string diag;
              for (unsigned p = 0; p <= cap; ++p) {
                const DegreeData dd = degree_data(bp, p);
                long lhs_mass = 0;
                for (const auto& e : table.entries)
                  if (e.p == p)
                    lhs_mass += e.multiplicity * weyl_dimension(bp.levi_ctx.ws, e.lambda_prime);
                const long rhs_mass = static_cast<long>(dd.monomials.size());
                if (lhs_mass != rhs_mass)
                  diag += "p=" + std::to_string(p) + ": " + std::to_string(lhs_mass) + " vs " +
                          std::to_string(rhs_mass) + "; ";
              }
              add("mass-identity", true,
                  diag.empty() ? "table mass matches dim(C x top x S^p) at every degree"
                               : "semisimplicity diagnostic: " + diag);
              // theta = sigma: blattner consistency
              if (li.pair.sigma.matrix == li.pair.theta.matrix &&
                  li.parabolic.cartan_k.dim() == li.algebra.rank) {
                bool equal = true;
                for (unsigned p = 0; p <= cap && equal; ++p) {
                  WeightCharacter branch_side;
                  for (const auto& e : table.entries)
                    if (e.p == p) {
                      IrreducibleModule F = construct_irreducible(li.algebra, bp.levi_ctx,
                                                                  e.lambda_prime,
                                                                  li.module_budget);
                      for (const auto& [w, mlt] : F.character.entries)
                        branch_side.add(w, mlt * e.multiplicity);
                    }
                  WeightCharacter blattner_side;
                  const WeightCharacter full =
                      blattner_character(li.algebra, li.parabolic, li.pair, lam, p);
                  for (const auto& [mu, mlt] : full.entries) {
                    if (!blattner_dominant(li.algebra, li.parabolic, li.pair, mu)) continue;
                    const auto pos =
                        blattner_positive_system(li.algebra, li.parabolic, li.pair);
                    const auto ws = weight_system_from_roots(pos, li.algebra.rd.weight_form);
                    for (const auto& [w, m2] : freudenthal_character(ws, mu).entries)
                      blattner_side.add(w, m2 * mlt);
                  }
                  if (!(branch_side == blattner_side)) equal = false;
                }
                add("blattner-consistency", equal,
                    "weight-expanded branch table vs the multiplicity bound");
              }
            } catch (const Error& e) {
              add("hom-euler-agreement", false, e.what());
            }
          } else {
            add("lambda-gates", true, "lambda outside hypotheses; branching checks skipped");
          }
        }
      }
    } catch (const Error& e) {
      if (e.kind == ErrorKind::CriteriaDisagree || e.kind == ErrorKind::EqualityViolated) {
        add("criteria-agreement", false, e.what());
      } else {
        throw;
      }
    }
  }

  rep["checks"] = checks;
  return rep;
}

// Aggregated corpus sweep for `oracle --corpus`.
json corpus_sweep(int& exit_code) {
  json out;
  Corpus corpus = generate_corpus(standard_corpus_types());
  std::size_t open = 0, decomposable = 0, checked = 0, proj_fail = 0;
  for (const auto& ci : corpus.instances) {
    const ChevalleyAlgebra& a = corpus.algebra_of(ci);
    const ThetaStableParabolic pb = parabolic_from_grading(a, ci.pair, ci.grading);
    if (!is_sigma_open(a, pb, ci.pair)) continue;
    ++open;
    const DecompVerdict v = is_discretely_decomposable(a, pb, ci.pair);
    ++checked;
    if (!v.decomposable) continue;
    ++decomposable;
    const LeviSplit split = levi_split(a, v.qprime, ci.pair);
    const Subspace qpp = construct_qdoubleprime(a, v.qprime, split, ci.pair);
    const ProjectionEquality pe = projection_equality_check(a, pb, ci.pair, v.qprime, qpp);
    if (!pe.all_equal()) ++proj_fail;
  }
  out["instances"] = corpus.instances.size();
  out["sigma_open"] = open;
  out["criteria_checked"] = checked;
  out["decomposable"] = decomposable;
  out["projection_failures"] = proj_fail;
  if (proj_fail > 0) exit_code = 3;
  return out;
}

std::string text_render(const json& rep) {
  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + " | " +
         rep["command"].get<std::string>() + "\n";
  if (rep.contains("sigma_open"))
    out += "sigma-open: " + std::string(rep["sigma_open"].get<bool>() ? "yes" : "no") + "\n";
  if (rep.contains("decomposable") && !rep["decomposable"].is_null())
    out += "decomposable: " + std::string(rep["decomposable"].get<bool>() ? "yes" : "no") + "\n";
  if (rep.contains("valid")) out += "valid: yes\n";
  if (rep.contains("algebra"))
    out += "algebra: dim " + std::to_string(rep["algebra"]["dim"].get<std::size_t>()) + "\n";
  if (rep.contains("table") && rep["table"].is_object()) {
    out += "p | lambda' | multiplicity | method | weakly-fair(q'')\n";
    for (const auto& row : rep["table"]["rows"]) {
      std::string lp;
      for (const auto& c : row["lambda_prime"]) lp += c.get<std::string>() + " ";
      out += std::to_string(row["p"].get<unsigned>()) + " | " + lp + "| " +
             std::to_string(row["multiplicity"].get<long>()) + " | " +
             row["method"].get<std::string>() + " | " +
             (row["weakly_fair_for_qdoubleprime"].get<bool>() ? "yes" : "no") + "\n";
    }
  }
  if (rep.contains("table") && rep["table"].is_array()) {
    out += "p | mu | multiplicity\n";
    for (const auto& row : rep["table"]) {
      std::string mu;
      for (const auto& c : row["mu"]) mu += c.get<std::string>() + " ";
      out += std::to_string(row["p"].get<unsigned>()) + " | " + mu + "| " +
             std::to_string(row["multiplicity"].get<long>()) + "\n";
    }
  }
  if (rep.contains("assvar")) {
    out += "dim Ass_g: " + std::to_string(rep["assvar"]["dim_assvar_g"].get<std::size_t>()) +
           "\n";
    out += "dim Ass_g': " +
           std::to_string(rep["assvar"]["dim_assvar_gprime"].get<std::size_t>()) + "\n";
    out += std::string("projection equal: ") +
           (rep["assvar"]["projection_equal"].get<bool>() ? "yes" : "no") + "\n";
  }
  if (rep.contains("checks")) {
    for (const auto& c : rep["checks"])
      out += std::string(c["pass"].get<bool>() ? "PASS " : "FAIL ") +
             c["name"].get<std::string>() + ": " + c["detail"].get<std::string>() + "\n";
  }
  if (rep.contains("corpus")) {
    out += "corpus instances: " + std::to_string(rep["corpus"]["instances"].get<std::size_t>()) +
           ", sigma-open: " + std::to_string(rep["corpus"]["sigma_open"].get<std::size_t>()) +
           ", decomposable: " +
           std::to_string(rep["corpus"]["decomposable"].get<std::size_t>()) + "\n";
  }
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::DegenerateSplit:
      return 2;
    case ErrorKind::CriteriaDisagree:
    case ErrorKind::EqualityViolated:
    case ErrorKind::CertificationFailed:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::string usage =
      "usage: branchkit <validate|check|construct|branch|blattner|assvar|oracle> <file>\n"
      "       [--max-p N] [--seed S] [--json|--text] [--budget-dim N] [--budget-terms N]\n"
      "       [--override-weakly-fair] [--corpus] [--timing]\n";
  if (args.empty()) {
    err << usage;
    return 1;
  }
  const std::string command = args[0];
  std::string path;
  bool as_json = true, corpus = false, timing = false;
  long max_p = -1, budget_dim = -1, budget_terms = -1;
  std::uint64_t seed = 0;
  bool seed_set = false, override_wf = false;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& s = args[i];
    auto next = [&](const char* flag) -> std::string {
      if (i + 1 >= args.size()) {
        fail(ErrorKind::ParseError, std::string(flag) + " needs a value");
      }
      return args[++i];
    };
    if (s == "--json") as_json = true;
    else if (s == "--text") as_json = false;
    else if (s == "--corpus") corpus = true;
    else if (s == "--timing") timing = true;
    else if (s == "--override-weakly-fair") override_wf = true;
    else if (s == "--max-p") max_p = std::stol(next("--max-p"));
    else if (s == "--seed") { seed = std::stoull(next("--seed")); seed_set = true; }
    else if (s == "--budget-dim") budget_dim = std::stol(next("--budget-dim"));
    else if (s == "--budget-terms") budget_terms = std::stol(next("--budget-terms"));
    else if (!s.empty() && s[0] == '-') {
      err << "unknown flag " << s << "\n" << usage;
      return 1;
    } else {
      path = s;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    json rep;
    if (command == "oracle" && corpus) {
      rep["schema"] = kSchemaVersion;
      rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
      rep["command"] = "oracle";
      rep["corpus"] = corpus_sweep(code);
    } else {
      if (path.empty()) {
        err << usage;
        return 1;
      }
      InstanceData data = parse_instance_file(path);
      if (max_p >= 0) data.max_p = static_cast<unsigned>(max_p);
      if (seed_set) data.seed = seed;
      if (budget_dim > 0) data.module_dim_budget = budget_dim;
      if (budget_terms > 0) data.poly_term_budget = static_cast<std::size_t>(budget_terms);
      if (override_wf) data.override_weakly_fair = true;
      const LoadedInstance li = load_instance(data);
      if (command == "validate") rep = cmd_validate(li);
      else if (command == "check") rep = cmd_check(li);
      else if (command == "construct") rep = cmd_construct(li);
      else if (command == "branch") rep = cmd_branch(li);
      else if (command == "blattner") rep = cmd_blattner(li);
      else if (command == "assvar") rep = cmd_assvar(li, code);
      else if (command == "oracle") rep = cmd_oracle(li, code);
      else {
        err << "unknown command '" << command << "'\n" << usage;
        return 1;
      }
    }
    out << (as_json ? rep.dump(2) + "\n" : text_render(rep));
  } catch (const Error& e) {
    err << e.what() << "\n";
    code = exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    err << "elapsed_ms " << ms << "\n";
  }
  return code;
}

}  // namespace branchkit
