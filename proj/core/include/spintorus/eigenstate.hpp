#pragma once

// Scalar products <θ_P|Ψ> of the nested SoV basis with a transfer-matrix
// eigenstate, eigenstate reconstruction from Λ(θ_j), and the N = 2
// homogeneous-limit experiment.
//
// Ψ is normalized through ψ̄₀ = <0̄|Ψ>; every quantity here is linear in it.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "spintorus/chain_spec.hpp"
#include "spintorus/spectrum.hpp"

namespace spintorus {

// f_m(θ_P) = Π_l sinh η d_{p_l}(θ_{p_l}) a(θ_{p_l}) Π_{k≠l} sinh(θ_{p_l}−θ_{p_k}+η)/sinh(θ_{p_l}−θ_{p_k})
[[nodiscard]] Complex f_factor(std::span<const int> pset, const ChainSpec& spec);

// g_m(v|u) = Π_{α,k} sinh(u_α−v_k+η) sinh(u_α−v_k) / Π_{k<l} sinh(u_l−u_k) sinh(v_k−v_l) · det 𝓜,
// 𝓜_{αk} = sinh η e^{−(u_α−v_k)/3} / (sinh(u_α−v_k+η) sinh(u_α−v_k)).
// The row prefactors are folded into 𝓜 so coincident u_α = v_k are regular.
// Throws PoleError on coincidences inside vset or inside uset.
[[nodiscard]] Complex g_m_function(std::span<const Complex> vset, std::span<const Complex> uset, Complex eta);

// F_m(θ_P) = <0| C²(θ_{p_1})⋯C²(θ_{p_m}) |Ψ> for sorted P. lambda_at_theta holds Λ(θ_1..θ_N).
// Throws PoleError when Λ vanishes on the complement of P.
[[nodiscard]] Complex scalar_F(std::span<const int> pset, std::span<const Complex> lambda_at_theta, Complex psi_bar0,
                               const ChainSpec& spec);

struct ScalarProductTable {
  std::map<std::vector<int>, Complex> entries;  // every subset of 1..N

  [[nodiscard]] Complex at(const std::vector<int>& pset) const;
};

[[nodiscard]] ScalarProductTable scalar_product_table(std::span<const Complex> lambda_at_theta, Complex psi_bar0,
                                                      const ChainSpec& spec);

// |Ψ> = Σ_idx F(block₂) Π_{block₃} Λ(θ) / G(idx) · right_state(idx).
[[nodiscard]] StateVector reconstruct(std::span<const Complex> lambda_at_theta, Complex psi_bar0,
                                      const ChainSpec& spec);

// Unit norm, first component above 1e-12 in modulus made real positive.
[[nodiscard]] StateVector fix_phase(const StateVector& v);

// Angle between two rays, from the Hermitian overlap.
[[nodiscard]] double ray_angle(const StateVector& a, const StateVector& b);

// Closed-form N = 2 homogeneous eigenstate built from B_i(0), B'_i(0), Λ(0) and Λ'(0).
[[nodiscard]] StateVector homogeneous_closed_form_n2(Complex lambda0, Complex lambda0_prime, Complex eta);

struct HomogeneousLimitOptions {
  std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
  std::vector<Complex> direction{{1.0, 0.0}, {-0.7, 0.4}};
  SpectrumOptions spectrum;
};

struct HomogeneousStateReport {
  Complex lambda0;                 // Λ(0) of the homogeneous state
  Complex lambda0_prime;           // Λ'(0)
  std::vector<double> match_error; // per ε: distance of the tracked Λ samples
  std::vector<double> distances;   // ‖Ψ(ε_{k+1}) − Ψ(ε_k)‖ after phase fixing
  bool monotone = false;
  bool has_closed_form = false;
  double angle = 0.0;              // extrapolated vector vs closed form (N = 2)
  double closed_form_residual = 0.0;
  double brute_force_angle = 0.0;  // extrapolated vector vs homogeneous eigenvector
};

struct HomogeneousLimitReport {
  int sites = 0;
  std::vector<double> eps;
  std::vector<Complex> direction;
  std::vector<HomogeneousStateReport> states;
  bool converged = false;        // every state monotone
  double max_angle = 0.0;        // over states, N = 2 only
  std::vector<std::string> notes;  // non-convergence and matching diagnostics
};

// Tracks every homogeneous eigenstate along θ = ε x. Failures are recorded
// in the report, not thrown; only invalid inputs throw.
[[nodiscard]] HomogeneousLimitReport homogeneous_limit_study(int sites, Complex eta,
                                                             const HomogeneousLimitOptions& options = {});

}  // namespace spintorus
