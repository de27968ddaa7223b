#include <doctest.h>

#include "test_support.hpp"

using namespace spintorus;
using spintorus::test::random_matrix;

TEST_CASE("dimension follows the dense budget") {
  const auto dim = [](int n, int sites) { return TensorShape{n, sites}.dimension(); };
  CHECK(dim(3, 6) == 729);
  CHECK(dim(2, 1) == 2);
  CHECK_THROWS_AS((void)dim(3, 7), DimensionError);
  CHECK_THROWS_AS((void)dim(4, 5), DimensionError);
  CHECK_THROWS_AS((void)dim(3, 0), DimensionError);
}

TEST_CASE("unit matrices and kron") {
  const Matrix e = unit_matrix(3, 2, 3);
  CHECK(e(1, 2) == Complex(1.0));
  CHECK(max_abs(e) == 1.0);
  CHECK(e.cwiseAbs().sum() == 1.0);

  const Matrix k = kron(unit_matrix(2, 1, 2), unit_matrix(3, 3, 1));
  CHECK(k.rows() == 6);
  CHECK(k(2, 3) == Complex(1.0));  // |1,3><2,1| with first factor slowest
}

TEST_CASE("site embedding places the factor at the requested position") {
  std::mt19937_64 rng(1);
  const TensorShape shape{3, 3};
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix id = Matrix::Identity(3, 3);
  CHECK((embed_site_operator(a, 1, shape) - kron(kron(a, id), id)).norm() < 1e-14);
  CHECK((embed_site_operator(a, 2, shape) - kron(kron(id, a), id)).norm() < 1e-14);
  CHECK((embed_site_operator(a, 3, shape) - kron(kron(id, id), a)).norm() < 1e-14);
  CHECK_THROWS_AS((void)embed_site_operator(a, 4, shape), DimensionError);
  CHECK_THROWS_AS((void)embed_site_operator(Matrix::Identity(2, 2), 1, shape), DimensionError);
}

TEST_CASE("two-site embedding matches products of site operators") {
  std::mt19937_64 rng(2);
  const TensorShape shape{3, 3};
  const Matrix a = random_matrix(rng, 3, 3);
  const Matrix b = random_matrix(rng, 3, 3);
  const Matrix h = kron(a, b);
  const Operator direct = embed_site_operator(a, 3, shape) * embed_site_operator(b, 1, shape);
  CHECK((embed_two_site_operator(h, 3, 1, shape) - direct).norm() < 1e-13);
  CHECK_THROWS_AS((void)embed_two_site_operator(h, 2, 2, shape), DimensionError);
}

TEST_CASE("bilinear pairing does not conjugate") {
  StateVector x(2), y(2);
  x << Complex(0, 1), Complex(1, 0);
  y << Complex(0, 1), Complex(0, 0);
  CHECK(std::abs(bilinear_pair(x, y) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS((void)bilinear_pair(x, StateVector::Zero(3)), DimensionError);
}

TEST_CASE("uniform product states") {
  const TensorShape shape{3, 2};
  const StateVector zero = uniform_product_state(1, shape);
  const StateVector bar = uniform_product_state(3, shape);
  CHECK(zero(0) == Complex(1.0));
  CHECK(bar(8) == Complex(1.0));
  CHECK(zero.norm() == 1.0);
}

TEST_CASE("simultaneous eigenbasis of a degenerate commuting family") {
  std::mt19937_64 rng(3);
  const long dim = 6;
  const Matrix s = random_matrix(rng, dim, dim);
  const Matrix s_inv = s.inverse();
  Eigen::VectorXcd d1(dim), d2(dim);
  d1 << 1.0, 1.0, 2.0, 2.0, 3.0, 3.0;  // degenerate pairs
  d2 << 5.0, 7.0, 5.0, 7.0, 5.0, 7.0;  // split them
  const std::vector<Operator> family{s * d1.asDiagonal() * s_inv, s * d2.asDiagonal() * s_inv};

  const auto result = simultaneous_eigen(family);
  REQUIRE(result.pairs.size() == static_cast<std::size_t>(dim));
  for (const auto& p : result.pairs) {
    CHECK(p.residual < 1e-10);
    CHECK(std::abs(p.vector.norm() - 1.0) < 1e-12);
    CHECK(std::abs(bilinear_pair(p.dual, p.vector) - Complex(1.0)) < 1e-10);
  }
  CHECK(reconstruction_error(family, result) < 1e-10);
}

TEST_CASE("non-commuting family is refused") {
  Matrix x = Matrix::Zero(2, 2), z = Matrix::Zero(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const std::vector<Operator> family{x, z};
  CHECK_THROWS_AS((void)simultaneous_eigen(family), EigenError);
}
