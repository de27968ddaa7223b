#pragma once

// Trigonometric su(n) R-matrix in the principal gradation, the cyclic twist
// matrix g and the local Hamiltonian density.
//
// Layout: R is n²×n² in the ordering |a, b> (first factor slowest), and
// R^{ab}_{cd}(u) = <a,b| R(u) |c,d>.

#include "spintorus/tensor.hpp"

namespace spintorus {

struct RParams {
  int rank = 3;
  Complex eta{0.5, 0.0};

  // rank >= 2 and sinh(eta) != 0; throws SpecError otherwise.
  void validate() const;
};

[[nodiscard]] Matrix r_matrix(Complex u, const RParams& p);

// d/du R(u), entrywise from the analytic derivatives of the weight functions.
[[nodiscard]] Matrix r_matrix_derivative(Complex u, const RParams& p);

// Single element R^{ab}_{cd}(u); labels 1-based.
[[nodiscard]] Complex r_element(int a, int b, int c, int d, Complex u, const RParams& p);

// The four su(3) weights of the 9×9 block display.
struct Su3Weights {
  Complex a;  // sinh(u+η)
  Complex b;  // sinh u
  Complex c;  // e^{u/3} sinh η
  Complex d;  // e^{-u/3} sinh η
};
[[nodiscard]] Su3Weights su3_weights(Complex u, Complex eta);

// Cyclic shift |k> -> |k+1 mod n>; g^n = 1.
[[nodiscard]] Matrix twist_matrix(int n);

// Swap of the two tensor factors of C^n ⊗ C^n.
[[nodiscard]] Matrix permutation_matrix(int n);

// R_{21} = P R_{12} P.
[[nodiscard]] Matrix swap_factors(const Matrix& two_site, int n);

// Transpose in the first tensor factor only.
[[nodiscard]] Matrix partial_transpose_first(const Matrix& two_site, int n);

// h = d/du [P R(u)] at u = 0.
[[nodiscard]] Matrix local_hamiltonian(const RParams& p);

// Numerical rank by singular values relative to the largest one.
[[nodiscard]] int numerical_rank(const Matrix& m, double relative_threshold = 1e-10);

}  // namespace spintorus
