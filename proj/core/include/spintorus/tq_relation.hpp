#pragma once

// Inhomogeneous T-Q relation of the su(3) chain and its Bethe ansatz
// equations, with a multi-start damped Newton solver.
//
// Unknowns: four levels of N roots λ^(i)_l, the coefficients f₁^±, f₂^−
// of f₁(u) = f₁^+ e^u + f₁^− e^{−u}, f₂(u) = f₂^− e^{−u}, and e^{φ₁}.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spintorus/chain_spec.hpp"
#include "spintorus/spectrum.hpp"

namespace spintorus {

struct TQSolution {
  std::array<std::vector<Complex>, 4> roots;
  Complex f1_plus;
  Complex f1_minus;
  Complex f2_minus;
  Complex exp_phi1{1.0, 0.0};

  [[nodiscard]] Complex phi1() const { return std::log(exp_phi1); }
  [[nodiscard]] int sites() const { return static_cast<int>(roots[0].size()); }

  // Flat layout (λ^(1), …, λ^(4), f₁^+, f₁^−, f₂^−, e^{φ₁}).
  [[nodiscard]] std::vector<Complex> pack() const;
  static TQSolution unpack(std::span<const Complex> x, int sites);
};

// Q^(i)(u) = Π_l sinh(u − λ^(i)_l)
[[nodiscard]] Complex q_function(std::span<const Complex> roots, Complex u);

// Five-term T-Q expression. Throws PoleError when a Q denominator is below 1e-14.
[[nodiscard]] Complex tq_lambda(Complex u, const TQSolution& sol, const ChainSpec& spec);

// The 4N root equations followed by the 4 asymptotic equations.
// Throws PoleError on a vanishing Q denominator or e^{φ₁} = 0.
[[nodiscard]] std::vector<Complex> bae_residuals(const TQSolution& sol, const ChainSpec& spec);

struct BaeOptions {
  int seeds = 200;
  double seed_half_width = 1.0;  // λ seeds: θ̄ + box of this half-width in Re and Im
  std::uint64_t rng_seed = 20160113;
  int max_iterations = 100;
  double tolerance = 1e-10;       // max |residual| for convergence
  double jacobian_step = 1e-7;
  double dedup_tolerance = 1e-7;
  double match_tolerance = 1e-7;  // relative to max |Λ_bf(θ_j)|
  double selection_tolerance = 1e-7;
  int threads = 0;                // 0: worker_count()
};

struct NewtonOutcome {
  TQSolution solution;
  double residual = 0.0;  // max |residual|; infinity when the run hit a pole
  int iterations = 0;
  bool converged = false;
};

// Damped Newton from a starting point.
[[nodiscard]] NewtonOutcome newton_solve(const TQSolution& start, const ChainSpec& spec, const BaeOptions& options = {});

// Deterministic seeds: λ in a box around θ̄, coefficients and e^{φ₁} in the unit disk.
[[nodiscard]] std::vector<TQSolution> bae_seeds(const ChainSpec& spec, const BaeOptions& options = {});

// True when the two solutions agree up to permutations within each level,
// shifts of single roots by iπ and the coefficient signs these induce.
[[nodiscard]] bool same_solution(const TQSolution& a, const TQSolution& b, double tolerance);

struct BaeSolution {
  TQSolution solution;
  double residual = 0.0;
  int record = -1;           // matched brute-force record
  double match_error = 0.0;  // max_j |Λ_tq(θ_j) − Λ_bf(θ_j)| / scale
  int z_charge = 0;
};

struct BaeReport {
  std::vector<BaeSolution> solutions;  // converged, deduplicated, selected, matched
  int converged_seeds = 0;
  int distinct_converged = 0;
  int rejected_pole = 0;       // T-Q expression singular at some θ_j
  int rejected_selection = 0;  // Π Λ(θ_j)/Π a(θ_j) not a cube root of unity
  int unmatched = 0;           // selected but reproducing no brute-force eigenvalue
  std::vector<double> seed_residuals;  // final residual per seed, seed order
  std::vector<int> matched_records;    // sorted record indices
  int total_records = 0;
  std::array<bool, 3> sectors_covered{};

  [[nodiscard]] double coverage() const {
    return total_records == 0 ? 0.0 : static_cast<double>(matched_records.size()) / total_records;
  }
};

// Multi-start solve matched against a brute-force spectrum. Requires su(3), N <= 2.
[[nodiscard]] BaeReport solve_bae(const ChainSpec& spec, const std::vector<SpectralRecord>& records,
                                  const BaeOptions& options = {});

// Re-converges a solution along θ → ε θ for each ε in turn, starting from
// the previous result. Returns one outcome per ε.
[[nodiscard]] std::vector<NewtonOutcome> track_scaling(const TQSolution& start, const ChainSpec& spec,
                                                       const std::vector<double>& eps, const BaeOptions& options = {});

}  // namespace spintorus
