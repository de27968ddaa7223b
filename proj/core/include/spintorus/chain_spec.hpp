#pragma once

#include <vector>

#include "spintorus/rmatrix.hpp"
#include "spintorus/tensor.hpp"

namespace spintorus {

// Model parameters: rank n, sites N, crossing parameter eta and the
// inhomogeneities theta_1..theta_N.
//
// The aggregate itself is unchecked so that the homogeneous point
// (all theta = 0) can be represented; constructions that need genericity
// call require_generic().
struct ChainSpec {
  int rank = 3;
  int sites = 1;
  Complex eta{0.5, 0.0};
  std::vector<Complex> theta;

  [[nodiscard]] TensorShape shape() const { return {rank, sites}; }
  [[nodiscard]] long dimension() const { return shape().dimension(); }
  [[nodiscard]] RParams r_params() const { return {rank, eta}; }
  // theta_j for 1-based j
  [[nodiscard]] Complex th(int j) const { return theta.at(static_cast<std::size_t>(j - 1)); }
};

// Checks rank/eta/size/budget only. Throws SpecError / DimensionError.
void validate_shape(const ChainSpec& spec);

// Additionally: theta pairwise distinct with sinh(θ_j−θ_k) and
// sinh(θ_j−θ_k±η) away from zero for j != k. The message names the violated
// invariant and the offending pair.
void require_generic(const ChainSpec& spec, double threshold = 1e-12);

// theta_j = 0.13 j + 0.07 i j.
[[nodiscard]] ChainSpec default_generic_spec(int rank, int sites, Complex eta = {0.5, 0.0});

[[nodiscard]] ChainSpec homogeneous_spec(int rank, int sites, Complex eta = {0.5, 0.0});

}  // namespace spintorus
