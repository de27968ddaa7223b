#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spintorus/spintorus.hpp"

namespace spintorus::cli {

// Malformed config file: bad JSON, unknown or mistyped fields.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int rank = 3;
  int sites = 2;
  Complex eta{0.5, 0.0};
  std::vector<Complex> theta;  // empty: θ_j = 0.13 j + 0.07 i j
  std::uint64_t rng_seed = 20160113;
  Tolerances tolerances;       // merged over default_tolerances()
  std::string output_path;     // empty: "<command>.json"
  int bae_seeds = 200;
  std::vector<double> homog_eps{0.1, 0.05, 0.025, 0.0125};
  std::vector<Complex> homog_direction;  // empty: the resolved θ

  // Spec with θ resolved; shape only, genericity is checked per command.
  [[nodiscard]] ChainSpec spec() const;
  [[nodiscard]] Json resolved_json() const;
};

// Throws ConfigError on schema problems.
[[nodiscard]] RunConfig parse_run_config(const Json& j);
[[nodiscard]] RunConfig load_run_config(const std::string& path);

}  // namespace spintorus::cli
