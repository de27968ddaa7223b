#include "spintorus/rmatrix.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "spintorus/errors.hpp"

namespace spintorus {

void RParams::validate() const {
  if (rank < 2) throw SpecError("R-matrix rank must be at least 2, got " + std::to_string(rank));
  if (std::abs(std::sinh(eta)) < 1e-12) throw SpecError("crossing parameter must satisfy sinh(eta) != 0");
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag())) throw SpecError("eta must be finite");
}

namespace {

// Exponent multiplying u in the weight of E^{k,l} ⊗ E^{l,k}, k != l.
double exchange_exponent(int n, int k, int l) {
  if (k < l) return static_cast<double>(n - 2 * (l - k)) / n;
  return -static_cast<double>(n - 2 * (k - l)) / n;
}

// Fills R (derivative == false) or dR/du (derivative == true).
Matrix build(Complex u, const RParams& p, bool derivative) {
  p.validate();
  const int n = p.rank;
  Matrix r = Matrix::Zero(n * n, n * n);
  const Complex sh_eta = std::sinh(p.eta);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const int diag = k * n + l;
      if (k == l) {
        r(diag, diag) = derivative ? std::cosh(u + p.eta) : std::sinh(u + p.eta);
        continue;
      }
      r(diag, diag) = derivative ? std::cosh(u) : std::sinh(u);
      // E^{k,l} ⊗ E^{l,k} maps |l,k> to |k,l>
      const double s = exchange_exponent(n, k + 1, l + 1);
      const Complex weight = sh_eta * std::exp(s * u);
      r(k * n + l, l * n + k) = derivative ? s * weight : weight;
    }
  }
  return r;
}

}  // namespace

Matrix r_matrix(Complex u, const RParams& p) { return build(u, p, false); }

Matrix r_matrix_derivative(Complex u, const RParams& p) { return build(u, p, true); }

Complex r_element(int a, int b, int c, int d, Complex u, const RParams& p) {
  const int n = p.rank;
  if (a == b && b == c && c == d) return std::sinh(u + p.eta);
  if (a == c && b == d) return std::sinh(u);
  if (a == d && b == c) return std::sinh(p.eta) * std::exp(exchange_exponent(n, a, b) * u);
  return {};
}

Su3Weights su3_weights(Complex u, Complex eta) {
  const Complex sh = std::sinh(eta);
  return {std::sinh(u + eta), std::sinh(u), std::exp(u / 3.0) * sh, std::exp(-u / 3.0) * sh};
}

Matrix twist_matrix(int n) {
  if (n < 2) throw SpecError("twist matrix needs n >= 2");
  Matrix g = Matrix::Zero(n, n);
  g(0, n - 1) = 1.0;
  for (int k = 1; k < n; ++k) g(k, k - 1) = 1.0;
  return g;
}

Matrix permutation_matrix(int n) {
  Matrix p = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) p(b * n + a, a * n + b) = 1.0;
  }
  return p;
}

Matrix swap_factors(const Matrix& two_site, int n) {
  const Matrix p = permutation_matrix(n);
  return p * two_site * p;
}

Matrix partial_transpose_first(const Matrix& two_site, int n) {
  Matrix out(n * n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) out(c * n + b, a * n + d) = two_site(a * n + b, c * n + d);
      }
    }
  }
  return out;
}

Matrix local_hamiltonian(const RParams& p) {
  // P R(u) has derivative P R'(u); no finite differences involved.
  return permutation_matrix(p.rank) * r_matrix_derivative(Complex{}, p);
}

int numerical_rank(const Matrix& m, double relative_threshold) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > relative_threshold * sv(0)) ++rank;
  }
  return rank;
}

}  // namespace spintorus
