#include "branchkit/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace branchkit {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  fail(ErrorKind::ParseError, path + ": " + why);
}

Rat rat_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return rat_parse(j.get<std::string>());
    } catch (const Error&) {
      bad_field(path, "not a rational literal");
    }
  }
  bad_field(path, "expected integer or rational string");
}

QVec vec_field(const json& j, const std::string& path) {
  if (!j.is_array()) bad_field(path, "expected array");
  QVec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rat_field(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

QMat mat_field(const json& j, const std::string& path) {
  if (!j.is_array()) bad_field(path, "expected array of rows");
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(vec_field(j[i], path + "[" + std::to_string(i) + "]"));
  return QMat::from_rows(rows);
}

InvolutionSpec involution_field(const json& j, const std::string& path) {
  InvolutionSpec spec;
  if (!j.is_object()) bad_field(path, "expected object");
  if (!j.contains("mode")) bad_field(path + ".mode", "missing");
  spec.mode = j["mode"].get<std::string>();
  if (spec.mode == "identity") return spec;
  if (spec.mode == "signs") {
    if (j.contains("simple_signs")) {
      for (const auto& v : j["simple_signs"]) spec.simple_signs.push_back(v.get<int>());
    }
    if (j.contains("signs"))
      for (const auto& v : j["signs"]) spec.signs.push_back(v.get<int>());
    if (j.contains("root_map"))
      for (const auto& v : j["root_map"]) spec.root_map.push_back(v.get<long>());
    if (j.contains("cartan")) spec.cartan = mat_field(j["cartan"], path + ".cartan");
    if (spec.simple_signs.empty() && spec.signs.empty() && spec.root_map.empty())
      bad_field(path, "signs mode needs simple_signs, signs or root_map");
    return spec;
  }
  if (spec.mode == "swap") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() != 2)
      bad_field(path + ".factors", "expected [i, j]");
    spec.factor1 = j["factors"][0].get<std::size_t>();
    spec.factor2 = j["factors"][1].get<std::size_t>();
    return spec;
  }
  if (spec.mode == "matrix") {
    if (!j.contains("rows")) bad_field(path + ".rows", "missing");
    spec.matrix = mat_field(j["rows"], path + ".rows");
    return spec;
  }
  bad_field(path + ".mode", "unknown mode '" + spec.mode + "'");
}

}  // namespace

InstanceData parse_instance_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  InstanceData d;
  if (!j.contains("algebra")) bad_field("algebra", "missing");
  if (!j["algebra"].is_array() || j["algebra"].empty()) bad_field("algebra", "expected [[family, rank], ...]");
  for (std::size_t i = 0; i < j["algebra"].size(); ++i) {
    const auto& f = j["algebra"][i];
    const std::string path = "algebra[" + std::to_string(i) + "]";
    if (!f.is_array() || f.size() != 2) bad_field(path, "expected [family, rank]");
    const std::string fam = f[0].get<std::string>();
    if (fam.size() != 1) bad_field(path, "family must be a single letter");
    SimpleFactor sf;
    sf.family = fam[0];
    sf.rank = f[1].get<unsigned>();
    d.type.push_back(sf);
  }
  if (!j.contains("theta")) bad_field("theta", "missing");
  d.theta = involution_field(j["theta"], "theta");
  if (!j.contains("sigma")) bad_field("sigma", "missing");
  d.sigma = involution_field(j["sigma"], "sigma");
  if (!j.contains("grading")) bad_field("grading", "missing");
  d.grading = vec_field(j["grading"], "grading");
  if (j.contains("lambda")) {
    d.lambda = vec_field(j["lambda"], "lambda");
    d.has_lambda = true;
  }
  if (j.contains("max_p")) d.max_p = j["max_p"].get<unsigned>();
  if (j.contains("seed")) d.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (b.contains("module_dim")) d.module_dim_budget = b["module_dim"].get<long>();
    if (b.contains("poly_terms")) d.poly_term_budget = b["poly_terms"].get<std::size_t>();
  }
  if (j.contains("override_weakly_fair")) d.override_weakly_fair = j["override_weakly_fair"].get<bool>();
  return d;
}

InstanceData parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

LieInvolution build_involution(const ChevalleyAlgebra& a, const InvolutionSpec& spec,
                               const std::string& field) {
  try {
    if (spec.mode == "identity") return identity_involution(a);
    if (spec.mode == "swap") return swap_involution(a, spec.factor1, spec.factor2);
    if (spec.mode == "matrix") return involution_from_matrix(a, spec.matrix);
    if (!spec.simple_signs.empty() && spec.signs.empty() && spec.root_map.empty())
      return sign_involution(a, spec.simple_signs);
    return involution_from_signs(a, spec.root_map, spec.cartan, spec.signs);
  } catch (const Error& e) {
    fail(e.kind, field + ": " + e.what());
  }
}

LoadedInstance load_instance(const InstanceData& data) {
  LoadedInstance li;
  li.data = data;
  BuildOptions opts;
  li.algebra = build_algebra(data.type, opts);
  const LieInvolution theta = build_involution(li.algebra, data.theta, "theta");
  const LieInvolution sigma = build_involution(li.algebra, data.sigma, "sigma");
  li.pair = derive_pair(li.algebra, theta, sigma);
  if (data.grading.size() != li.algebra.rank)
    fail(ErrorKind::ParseError, "grading: expected " + std::to_string(li.algebra.rank) +
                                    " coordinates over the Cartan basis");
  Element x = li.algebra.zero();
  for (std::size_t i = 0; i < li.algebra.rank; ++i) x[i] = data.grading[i];
  li.parabolic = parabolic_from_grading(li.algebra, li.pair, x);
  li.poly_budget.max_terms = data.poly_term_budget;
  li.module_budget.dim_bound = data.module_dim_budget;
  return li;
}

}  // namespace branchkit
