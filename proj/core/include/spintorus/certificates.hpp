#pragma once

// Named numerical checks of the algebraic identities of the model. Each
// returns the worst relative residual found together with the tolerance it
// was judged against. Random points are drawn with |Re u|, |Im u| <= 2.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spintorus/chain_spec.hpp"

namespace spintorus {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  std::map<std::string, double> metrics;
};

using Tolerances = std::map<std::string, double>;

// Defaults keyed by check name, plus "off-diagonal" and "vanishing".
[[nodiscard]] Tolerances default_tolerances();
[[nodiscard]] double tolerance_for(const Tolerances& tolerances, const std::string& name);

struct CheckOptions {
  std::uint64_t seed = 20160113;
  int samples = 20;         // random points for R-matrix checks
  int operator_samples = 5; // random (u, v) pairs for operator identities
  int decomposition_samples = 3;
};

[[nodiscard]] CheckResult check_qybe(const RParams& p, const CheckOptions& options, double tolerance);
[[nodiscard]] CheckResult check_initial_condition(const RParams& p, double tolerance);
[[nodiscard]] CheckResult check_unitarity(const RParams& p, const CheckOptions& options, double tolerance);
[[nodiscard]] CheckResult check_crossing(const RParams& p, const CheckOptions& options, double tolerance);
[[nodiscard]] CheckResult check_fusion_rank(const RParams& p, double tolerance);
[[nodiscard]] CheckResult check_twist_invariance(const RParams& p, const CheckOptions& options, double tolerance);

[[nodiscard]] CheckResult check_commuting_transfer(const ChainSpec& spec, const CheckOptions& options,
                                                   double tolerance);
[[nodiscard]] CheckResult check_exchange_relations(const ChainSpec& spec, const CheckOptions& options,
                                                   double tolerance);
[[nodiscard]] CheckResult check_vacuum_actions(const ChainSpec& spec, const CheckOptions& options, double tolerance);
[[nodiscard]] CheckResult check_product_identity(const ChainSpec& spec, double tolerance);
[[nodiscard]] CheckResult check_hamiltonian(int rank, int sites, Complex eta, double tolerance);

// Gram diagonal against G_m (relative) with the off-diagonal bound in
// metrics, and the identity resolution. su(3), N <= 4.
[[nodiscard]] std::vector<CheckResult> check_basis(const ChainSpec& spec, const Tolerances& tolerances);

// Expansion of <idx|Op(u) against direct action for every label and the
// five operators, plus the left and right vanishing relations. su(3).
[[nodiscard]] CheckResult check_decompositions(const ChainSpec& spec, const CheckOptions& options, double tolerance,
                                               double vanishing_tolerance);

// The verify suite in its fixed order.
[[nodiscard]] std::vector<CheckResult> run_verify_suite(const ChainSpec& spec, const Tolerances& tolerances,
                                                        const CheckOptions& options);

}  // namespace spintorus
