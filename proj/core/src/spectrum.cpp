#include "spintorus/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"

namespace spintorus {

namespace {

Complex dual_expectation(const SpectralRecord& record, const Operator& op) {
  return bilinear_pair(record.dual, op * record.eigenvector) / bilinear_pair(record.dual, record.eigenvector);
}

}  // namespace

std::vector<SpectralRecord> brute_force_spectrum(const ChainSpec& spec, const SpectrumOptions& options) {
  validate_shape(spec);
  if (spec.sites > 5) throw DimensionError("brute_force_spectrum: N <= 5");

  const std::vector<Operator> family{transfer(options.u1, spec), transfer(options.u2, spec), twist_operator(spec)};
  const auto decomposition = simultaneous_eigen(family, options.eigen);

  std::vector<Complex> points = options.sample_points;
  std::vector<Operator> sampled;
  sampled.reserve(points.size());
  for (const auto& u : points) sampled.push_back(transfer(u, spec));
  std::vector<Operator> at_theta;
  for (int j = 1; j <= spec.sites; ++j) at_theta.push_back(transfer(spec.th(j), spec));

  std::vector<SpectralRecord> records;
  records.reserve(decomposition.pairs.size());
  for (const auto& pair : decomposition.pairs) {
    SpectralRecord r;
    r.eigenvector = pair.vector;
    r.dual = pair.dual;
    r.twist_eigenvalue = pair.eigenvalues[2];
    const double norm = r.eigenvector.norm();
    for (std::size_t k = 0; k < points.size(); ++k) {
      const Complex lambda = dual_expectation(r, sampled[k]);
      r.samples.push_back({points[k], lambda});
      r.residual = std::max(r.residual, (sampled[k] * r.eigenvector - lambda * r.eigenvector).norm() / norm);
      r.scale = std::max(r.scale, sampled[k].norm());
    }
    for (const auto& t : at_theta) {
      const Complex lambda = dual_expectation(r, t);
      r.lambda_at_theta.push_back(lambda);
      r.residual = std::max(r.residual, (t * r.eigenvector - lambda * r.eigenvector).norm() / norm);
      r.scale = std::max(r.scale, t.norm());
    }
    r.z_charge = z_charge(r, spec);
    records.push_back(std::move(r));
  }

  std::stable_sort(records.begin(), records.end(), [](const SpectralRecord& a, const SpectralRecord& b) {
    if (a.z_charge != b.z_charge) return a.z_charge < b.z_charge;
    const Complex la = a.lambda_at_theta.front();
    const Complex lb = b.lambda_at_theta.front();
    if (la.real() != lb.real()) return la.real() < lb.real();
    return la.imag() < lb.imag();
  });
  return records;
}

Complex eigenvalue_at(const SpectralRecord& record, Complex u, const ChainSpec& spec) {
  return dual_expectation(record, transfer(u, spec));
}

Complex eigenvalue_derivative_at(const SpectralRecord& record, Complex u, const ChainSpec& spec) {
  return dual_expectation(record, transfer_derivative(u, spec));
}

Complex z_ratio(const std::vector<Complex>& lambda_at_theta, const ChainSpec& spec) {
  if (static_cast<int>(lambda_at_theta.size()) != spec.sites) {
    throw DimensionError("z_ratio: need Λ at every θ_j");
  }
  Complex r{1.0, 0.0};
  for (int j = 1; j <= spec.sites; ++j) {
    r *= lambda_at_theta[static_cast<std::size_t>(j - 1)] / scalar_a(spec.th(j), spec);
  }
  return r;
}

int root_of_unity_exponent(Complex value, int n, double tolerance) {
  for (int z = 0; z < n; ++z) {
    if (std::abs(value - std::polar(1.0, 2.0 * std::numbers::pi * z / n)) < tolerance) return z;
  }
  throw InconsistencyError("value " + std::to_string(value.real()) + "+" + std::to_string(value.imag()) +
                           "i is not an " + std::to_string(n) + "-th root of unity");
}

int cube_root_exponent(Complex value, double tolerance) { return root_of_unity_exponent(value, 3, tolerance); }

int z_charge(const SpectralRecord& record, const ChainSpec& spec) {
  const int from_twist = root_of_unity_exponent(record.twist_eigenvalue, spec.rank);
  if (record.lambda_at_theta.empty()) return from_twist;
  const Complex ratio = z_ratio(record.lambda_at_theta, spec);
  if (std::abs(ratio - record.twist_eigenvalue) > 1e-6) {
    throw InconsistencyError("Z-charge from U(g) (" + std::to_string(from_twist) +
                             ") disagrees with the product of Λ(θ_j)/a(θ_j)");
  }
  return from_twist;
}

}  // namespace spintorus
