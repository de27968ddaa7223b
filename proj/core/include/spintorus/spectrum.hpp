#pragma once

// Transfer-matrix spectrum by joint diagonalization of {t(u₁), t(u₂), U(g)}
// and the Z₃ charge of each eigenstate.

#include <vector>

#include "spintorus/chain_spec.hpp"
#include "spintorus/tensor.hpp"

namespace spintorus {

inline const Complex kOmega = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);

struct LambdaSample {
  Complex u;
  Complex value;
};

struct SpectralRecord {
  StateVector eigenvector;  // unit norm, largest component real positive
  StateVector dual;         // dual·eigenvector = 1
  std::vector<LambdaSample> samples;
  std::vector<Complex> lambda_at_theta;  // Λ(θ_1..θ_N)
  Complex twist_eigenvalue;              // U(g) eigenvalue
  int z_charge = 0;
  double residual = 0.0;  // max over samples of ‖t(u)v − Λ(u)v‖ / ‖v‖
  double scale = 0.0;     // max over samples of ‖t(u)‖_F
};

struct SpectrumOptions {
  Complex u1{0.37, 0.21};
  Complex u2{-0.23, 0.45};
  // Λ is sampled here in addition to the θ_j.
  std::vector<Complex> sample_points{{0.37, 0.21}, {-0.23, 0.45}, {0.11, -0.17}};
  SimultaneousEigenOptions eigen;
};

// n^N records sorted by (Z, Re Λ(θ₁), Im Λ(θ₁)). Requires N <= 5.
[[nodiscard]] std::vector<SpectralRecord> brute_force_spectrum(const ChainSpec& spec,
                                                               const SpectrumOptions& options = {});

// Λ(u) = w^T t(u) v / w^T v.
[[nodiscard]] Complex eigenvalue_at(const SpectralRecord& record, Complex u, const ChainSpec& spec);
// Λ'(u) from the analytic derivative of t.
[[nodiscard]] Complex eigenvalue_derivative_at(const SpectralRecord& record, Complex u, const ChainSpec& spec);

// Π Λ(θ_j) / Π a(θ_j).
[[nodiscard]] Complex z_ratio(const std::vector<Complex>& lambda_at_theta, const ChainSpec& spec);

// Exponent z with value ≈ e^{2πiz/n}; throws InconsistencyError otherwise.
[[nodiscard]] int root_of_unity_exponent(Complex value, int n, double tolerance = 1e-6);

// Exponent Z with value ≈ ω^Z; throws InconsistencyError when value is not
// within tolerance of a cube root of unity.
[[nodiscard]] int cube_root_exponent(Complex value, double tolerance = 1e-6);

// Z from the U(g) eigenvalue (an n-th root of unity), cross-checked against z_ratio; throws
// InconsistencyError when the two disagree beyond 1e-6.
[[nodiscard]] int z_charge(const SpectralRecord& record, const ChainSpec& spec);

}  // namespace spintorus
