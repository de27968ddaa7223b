#include <doctest.h>

#include "test_support.hpp"

using namespace spintorus;

namespace {

// 30-digit references at eta = 0.5, u = 0.3.
constexpr double kA = 0.888105982187623006;
constexpr double kB = 0.304520293447142619;
constexpr double kC = 0.575899377177434837;
constexpr double kD = 0.471506530773621943;
constexpr double kRho1 = 0.178807708286488037;
constexpr double kRho2 = -0.895951777583534333;
constexpr double kSinhEta = 0.521095305493747362;
constexpr double kSinhEta2 = 0.271540317407621889;
constexpr double kCoshEta = 1.12762596520638079;

const RParams kSu3{3, {0.5, 0.0}};

}  // namespace

TEST_CASE("su(3) weights at u = 0.3") {
  const auto w = su3_weights(0.3, 0.5);
  CHECK(std::abs(w.a - kA) < 1e-15);
  CHECK(std::abs(w.b - kB) < 1e-15);
  CHECK(std::abs(w.c - kC) < 1e-15);
  CHECK(std::abs(w.d - kD) < 1e-15);
}

TEST_CASE("R-matrix entries use the four weights") {
  const Matrix r = r_matrix(0.3, kSu3);
  for (int a = 1; a <= 3; ++a) CHECK(std::abs(r_element(a, a, a, a, 0.3, kSu3) - kA) < 1e-15);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      CHECK(std::abs(r_element(a, b, a, b, 0.3, kSu3) - kB) < 1e-15);
      const Complex x = r_element(a, b, b, a, 0.3, kSu3);
      CHECK(std::min(std::abs(x - kC), std::abs(x - kD)) < 1e-15);
      // The exchange weights of a pair and of its mirror are c and d in some order.
      CHECK(std::abs(x * r_element(b, a, a, b, 0.3, kSu3) - kC * kD) < 1e-15);
    }
  }
  CHECK(r.cwiseAbs().maxCoeff() == doctest::Approx(kA).epsilon(1e-15));
  // Per row: one diagonal weight plus at most one exchange weight.
  for (long i = 0; i < 9; ++i) CHECK((r.row(i).array().abs() > 0.0).count() <= 2);
}

TEST_CASE("initial condition, unitarity and crossing at u = 0.3") {
  const Matrix id = Matrix::Identity(9, 9);
  CHECK((r_matrix(0.0, kSu3) - kSinhEta * permutation_matrix(3)).norm() < 1e-14);

  const Matrix u = r_matrix(0.3, kSu3) * swap_factors(r_matrix(-0.3, kSu3), 3);
  CHECK((u - kRho1 * id).norm() < 1e-14);

  const Complex shifted = -0.3 - 3.0 * 0.5;
  const Matrix c = partial_transpose_first(r_matrix(0.3, kSu3), 3) *
                   partial_transpose_first(swap_factors(r_matrix(shifted, kSu3), 3), 3);
  CHECK((c - kRho2 * id).norm() < 1e-14);
}

TEST_CASE("R-matrix derivative agrees with central differences") {
  const RParams p{4, {0.3, 0.2}};
  const Complex u{0.4, -0.3};
  const double h = 1e-5;
  const Matrix fd = (r_matrix(u + h, p) - r_matrix(u - h, p)) / (2.0 * h);
  CHECK((r_matrix_derivative(u, p) - fd).norm() < 1e-9);
}

TEST_CASE("twist and permutation") {
  const Matrix g = twist_matrix(3);
  CHECK((g * g * g - Matrix::Identity(3, 3)).norm() == 0.0);
  CHECK(g(1, 0) == Complex(1.0));  // |1> -> |2>
  const Matrix p = permutation_matrix(3);
  CHECK((p * p - Matrix::Identity(9, 9)).norm() == 0.0);
  CHECK((partial_transpose_first(partial_transpose_first(r_matrix(0.3, kSu3), 3), 3) - r_matrix(0.3, kSu3)).norm() ==
        0.0);
}

TEST_CASE("local Hamiltonian equals the derivative of P R at zero") {
  const Matrix h = local_hamiltonian(kSu3);
  const Matrix pr = permutation_matrix(3) * r_matrix_derivative(0.0, kSu3);
  CHECK((h - pr).norm() < 1e-14);
  // Diagonal of h holds cosh(eta) on |aa> and the exchange rates off it.
  CHECK(std::abs(h(0, 0) - kCoshEta) < 1e-14);
}

TEST_CASE("fusion point projector has rank n(n-1)/2") {
  for (int n = 2; n <= 4; ++n) {
    const RParams p{n, {0.5, 0.0}};
    CHECK(numerical_rank(r_matrix(-p.eta, p)) == n * (n - 1) / 2);
  }
  CHECK(std::abs(kSinhEta * kSinhEta - kSinhEta2) < 1e-15);
}

TEST_CASE("parameter validation") {
  const auto validate = [](int n, Complex eta) { RParams{n, eta}.validate(); };
  CHECK_THROWS_AS(validate(1, 0.5), SpecError);
  CHECK_THROWS_AS(validate(3, 0.0), SpecError);
  CHECK_THROWS_AS(validate(3, Complex(0.0, 3.14159265358979323846)), SpecError);
  CHECK_NOTHROW(validate(2, Complex(0.1, 0.2)));
}

TEST_CASE("certificate checks pass for n = 2, 3, 4") {
  const CheckOptions options;
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const RParams p{n, {0.5, 0.0}};
    CHECK(check_qybe(p, options, 1e-11).passed);
    CHECK(check_initial_condition(p, 1e-13).passed);
    CHECK(check_unitarity(p, options, 1e-11).passed);
    CHECK(check_crossing(p, options, 1e-11).passed);
    CHECK(check_fusion_rank(p, 1e-11).passed);
    CHECK(check_twist_invariance(p, options, 1e-11).passed);
  }
}
