#include "run_config.hpp"

#include <fstream>
#include <set>

namespace spintorus::cli {

namespace {

Complex complex_field(const Json& j, const std::string& name) {
  try {
    return complex_from_json(j);
  } catch (const SpecError&) {
    throw ConfigError("field '" + name + "' must be a number or [re, im]");
  }
}

template <typename T>
T number_field(const Json& j, const std::string& name) {
  if constexpr (std::is_floating_point_v<T>) {
    if (!j.is_number()) throw ConfigError("field '" + name + "' must be a number");
  } else {
    if (!j.is_number_integer()) throw ConfigError("field '" + name + "' must be an integer");
  }
  return j.get<T>();
}

std::vector<Complex> complex_list(const Json& j, const std::string& name) {
  if (!j.is_array()) throw ConfigError("field '" + name + "' must be a list of [re, im]");
  std::vector<Complex> out;
  for (const auto& z : j) out.push_back(complex_field(z, name));
  return out;
}

}  // namespace

ChainSpec RunConfig::spec() const {
  ChainSpec spec{rank, sites, eta, theta};
  if (theta.empty()) {
    validate_shape(ChainSpec{rank, sites, eta, std::vector<Complex>(static_cast<std::size_t>(std::max(sites, 0)))});
    spec = default_generic_spec(rank, sites, eta);
  }
  validate_shape(spec);
  return spec;
}

Json RunConfig::resolved_json() const {
  Json tol = Json::object();
  for (const auto& [k, v] : tolerances) tol[k] = v;
  const ChainSpec s = spec();
  return {{"n", rank},
          {"N", sites},
          {"eta", complex_json(eta)},
          {"theta", complex_list_json(s.theta)},
          {"rng_seed", rng_seed},
          {"tolerances", tol},
          {"output_path", output_path},
          {"bae_seeds", bae_seeds},
          {"homog_eps", homog_eps},
          {"homog_direction", complex_list_json(homog_direction.empty() ? s.theta : homog_direction)}};
}

RunConfig parse_run_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"n",          "N",         "eta",       "theta",    "rng_seed",
                                           "tolerances", "output_path", "bae_seeds", "homog_eps", "homog_direction"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config field '" + key + "'");
  }

  RunConfig c;
  c.tolerances = default_tolerances();
  if (j.contains("n")) c.rank = number_field<int>(j["n"], "n");
  if (j.contains("N")) c.sites = number_field<int>(j["N"], "N");
  if (j.contains("eta")) c.eta = complex_field(j["eta"], "eta");
  if (j.contains("theta")) c.theta = complex_list(j["theta"], "theta");
  if (j.contains("rng_seed")) {
    if (!j["rng_seed"].is_number_unsigned()) throw ConfigError("field 'rng_seed' must be a non-negative integer");
    c.rng_seed = j["rng_seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) throw ConfigError("field 'tolerances' must map check names to numbers");
    const auto defaults = default_tolerances();
    for (const auto& [name, value] : t.items()) {
      if (!defaults.contains(name)) throw ConfigError("unknown tolerance '" + name + "'");
      const double v = number_field<double>(value, "tolerances." + name);
      if (!(v > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
      c.tolerances[name] = v;
    }
  }
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) throw ConfigError("field 'output_path' must be a string");
    c.output_path = j["output_path"].get<std::string>();
  }
  if (j.contains("bae_seeds")) {
    c.bae_seeds = number_field<int>(j["bae_seeds"], "bae_seeds");
    if (c.bae_seeds < 1) throw ConfigError("field 'bae_seeds' must be positive");
  }
  if (j.contains("homog_eps")) {
    c.homog_eps.clear();
    if (!j["homog_eps"].is_array()) throw ConfigError("field 'homog_eps' must be a list of numbers");
    for (const auto& e : j["homog_eps"]) c.homog_eps.push_back(number_field<double>(e, "homog_eps"));
  }
  if (j.contains("homog_direction")) c.homog_direction = complex_list(j["homog_direction"], "homog_direction");

  if (!c.theta.empty() && static_cast<int>(c.theta.size()) != c.sites) {
    throw ConfigError("field 'theta' must have N entries");
  }
  if (!c.homog_direction.empty() && static_cast<int>(c.homog_direction.size()) != c.sites) {
    throw ConfigError("field 'homog_direction' must have N entries");
  }
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_run_config(j);
}

}  // namespace spintorus::cli
