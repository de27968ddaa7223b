#include "spintorus/serialize.hpp"

#include <cmath>

#include "spintorus/errors.hpp"

namespace spintorus {

namespace {

// JSON has no infinities; they are written as null.
Json real_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json complex_json(Complex z) { return Json::array({real_json(z.real()), real_json(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError("complex values are written as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_list_json(std::span<const Complex> zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(complex_json(z));
  return out;
}

Json spec_json(const ChainSpec& spec) {
  return {{"n", spec.rank}, {"N", spec.sites}, {"eta", complex_json(spec.eta)}, {"theta", complex_list_json(spec.theta)}};
}

Json state_json(const StateVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_json(v(k)));
  return out;
}

StateVector state_from_json(const Json& j) {
  if (!j.is_array()) throw SpecError("a state is an array of [re, im] pairs");
  StateVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
  return v;
}

Json index_json(const BasisIndex& idx) {
  return {{"m", idx.m}, {"m2", idx.m2}, {"p", idx.p}, {"label", idx.label()}};
}

Json basis_table_json(const ChainSpec& spec) {
  Json out = Json::array();
  for (const auto& idx : enumerate_basis(spec.sites)) {
    out.push_back({{"index", index_json(idx)}, {"g_factor", complex_json(g_factor(idx, spec))}});
  }
  return out;
}

Json check_json(const CheckResult& r) {
  Json j = {{"name", r.name},
            {"passed", r.passed},
            {"skipped", r.skipped},
            {"max_residual", real_json(r.residual)},
            {"tolerance", r.tolerance}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.metrics.empty()) {
    Json m = Json::object();
    for (const auto& [k, v] : r.metrics) m[k] = real_json(v);
    j["metrics"] = m;
  }
  return j;
}

Json record_json(const SpectralRecord& r, bool with_vector) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back({{"u", complex_json(s.u)}, {"lambda", complex_json(s.value)}});
  Json j = {{"z_charge", r.z_charge},
            {"twist_eigenvalue", complex_json(r.twist_eigenvalue)},
            {"lambda_at_theta", complex_list_json(r.lambda_at_theta)},
            {"samples", samples},
            {"residual", real_json(r.residual)},
            {"scale", real_json(r.scale)}};
  if (with_vector) j["eigenvector"] = state_json(r.eigenvector);
  return j;
}

Json solution_json(const TQSolution& s) {
  Json roots = Json::array();
  for (const auto& level : s.roots) roots.push_back(complex_list_json(level));
  return {{"lambda", roots},
          {"f1_plus", complex_json(s.f1_plus)},
          {"f1_minus", complex_json(s.f1_minus)},
          {"f2_minus", complex_json(s.f2_minus)},
          {"exp_phi1", complex_json(s.exp_phi1)}};
}

TQSolution solution_from_json(const Json& j) {
  TQSolution s;
  const auto& roots = j.at("lambda");
  if (!roots.is_array() || roots.size() != 4) throw SpecError("a T-Q solution has four root levels");
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& z : roots[i]) s.roots[i].push_back(complex_from_json(z));
  }
  s.f1_plus = complex_from_json(j.at("f1_plus"));
  s.f1_minus = complex_from_json(j.at("f1_minus"));
  s.f2_minus = complex_from_json(j.at("f2_minus"));
  s.exp_phi1 = complex_from_json(j.at("exp_phi1"));
  return s;
}

Json bae_report_json(const BaeReport& r) {
  Json solutions = Json::array();
  for (const auto& s : r.solutions) {
    solutions.push_back({{"solution", solution_json(s.solution)},
                         {"max_residual", real_json(s.residual)},
                         {"matched_record", s.record},
                         {"match_error", real_json(s.match_error)},
                         {"z_charge", s.z_charge}});
  }
  Json seeds = Json::array();
  for (double x : r.seed_residuals) seeds.push_back(real_json(x));
  return {{"solutions", solutions},
          {"converged_seeds", r.converged_seeds},
          {"distinct_converged", r.distinct_converged},
          {"rejected_pole", r.rejected_pole},
          {"rejected_selection", r.rejected_selection},
          {"unmatched", r.unmatched},
          {"matched_records", r.matched_records},
          {"total_records", r.total_records},
          {"coverage", r.coverage()},
          {"sectors_covered", r.sectors_covered},
          {"seed_residuals", seeds}};
}

Json homogeneous_report_json(const HomogeneousLimitReport& r) {
  Json states = Json::array();
  for (const auto& s : r.states) {
    Json j = {{"lambda0", complex_json(s.lambda0)},
              {"lambda0_prime", complex_json(s.lambda0_prime)},
              {"match_error", s.match_error},
              {"distances", s.distances},
              {"monotone", s.monotone},
              {"brute_force_angle", real_json(s.brute_force_angle)}};
    if (s.has_closed_form) {
      j["closed_form_angle"] = real_json(s.angle);
      j["closed_form_residual"] = real_json(s.closed_form_residual);
    }
    states.push_back(j);
  }
  Json j = {{"N", r.sites},
            {"eps", r.eps},
            {"direction", complex_list_json(r.direction)},
            {"converged", r.converged},
            {"states", states},
            {"notes", r.notes}};
  if (r.sites == 2) j["max_closed_form_angle"] = real_json(r.max_angle);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spintorus
