#pragma once

#include <random>

#include "spintorus/spintorus.hpp"

namespace spintorus::test {

inline Complex random_point(std::mt19937_64& rng, double half_width = 1.0) {
  std::uniform_real_distribution<double> dist(-half_width, half_width);
  const double re = dist(rng);
  return {re, dist(rng)};
}

inline Matrix random_matrix(std::mt19937_64& rng, long rows, long cols) {
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = random_point(rng);
  return m;
}

inline double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline double rel(const Matrix& got, const Matrix& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

}  // namespace spintorus::test
