#pragma once

// Dense complex linear algebra on V^{⊗N}, V = C^n.
//
// Basis ordering is |i_1, ..., i_N>, i_1 slowest, every i_k in 0..n-1
// internally (1..n in physics labels). All matrix serializations rely on it.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spintorus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxSites = 6;
inline constexpr long kMaxDimension = 729;

// Number of tensor factors and local dimension of the quantum space.
struct TensorShape {
  int rank = 3;
  int sites = 1;

  // n^N; throws DimensionError above the dense budget (N > 6 or dim > 729).
  [[nodiscard]] long dimension() const;
};

// Largest |entry|; 0 for an empty matrix.
[[nodiscard]] double max_abs(const Matrix& m);
[[nodiscard]] double max_abs(const StateVector& v);

[[nodiscard]] bool all_finite(const Matrix& m);

// E^{k,l} with (E^{k,l})_{ab} = δ_{ka} δ_{lb}; k, l are 1-based.
[[nodiscard]] Matrix unit_matrix(int n, int k, int l);

[[nodiscard]] Matrix kron(const Matrix& a, const Matrix& b);

// id ⊗ … ⊗ a ⊗ … ⊗ id with a on factor `site` (1-based).
[[nodiscard]] Operator embed_site_operator(const Matrix& a, int site, const TensorShape& shape);

// Embeds an n²×n² matrix h, written in the ordering |x_first, x_second>,
// onto two distinct sites. The sites need not be adjacent or ordered.
[[nodiscard]] Operator embed_two_site_operator(const Matrix& h, int first, int second,
                                               const TensorShape& shape);

// Σ_k bra_k · ket_k. Transpose pairing, no complex conjugation.
[[nodiscard]] Complex bilinear_pair(const StateVector& bra, const StateVector& ket);

// Product state |i_1,…,i_N> with all labels equal to `level` (1-based).
[[nodiscard]] StateVector uniform_product_state(int level, const TensorShape& shape);

struct EigenPair {
  StateVector vector;                // unit 2-norm, largest component real positive
  StateVector dual;                  // left eigenvector, dual·vector = 1
  std::vector<Complex> eigenvalues;  // one per family member
  double residual = 0.0;             // max_O ‖O v − μ v‖ / (‖O‖_F ‖v‖)
};

struct SimultaneousEigenOptions {
  std::uint64_t seed = 20160113;
  int max_attempts = 5;
  double commutator_tolerance = 1e-10;
  double residual_tolerance = 1e-8;
};

struct SimultaneousEigenResult {
  std::vector<EigenPair> pairs;
  int attempts = 0;
  // κ₂ of the eigenvector matrix; large values flag quasi-degenerate spectra.
  double condition_number = 0.0;
};

// Joint eigen-decomposition of a commuting family. Degeneracies of one
// member are split by diagonalizing a random complex combination; a fresh
// combination is drawn when any residual exceeds the tolerance.
[[nodiscard]] SimultaneousEigenResult simultaneous_eigen(std::span<const Operator> family,
                                                         const SimultaneousEigenOptions& options = {});

// Relative Frobenius error of Σ μ v w^T against each operator; used to
// confirm a decomposition is complete.
[[nodiscard]] double reconstruction_error(std::span<const Operator> family,
                                          const SimultaneousEigenResult& result);

}  // namespace spintorus
