#include <doctest.h>

#include "test_support.hpp"

using namespace spintorus;
using spintorus::test::random_point;
using spintorus::test::rel;

TEST_CASE("one-site monodromy is the R-matrix in auxiliary blocks") {
  const ChainSpec spec = default_generic_spec(3, 1);
  const Complex u{0.3, 0.1};
  const Matrix r = r_matrix(u - spec.th(1), spec.r_params());
  const auto t = Monodromy::evaluate(spec, u);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK((t.entry(i, j) - r.block(3 * (i - 1), 3 * (j - 1), 3, 3)).norm() < 1e-15);
}

TEST_CASE("monodromy equals the full auxiliary product") {
  const ChainSpec spec = default_generic_spec(3, 3);
  const Complex u{-0.2, 0.4};
  const long dim = spec.dimension();
  // R_{0j} on C^3 ⊗ V^{⊗N} with the auxiliary factor slowest.
  Matrix full = Matrix::Identity(3 * dim, 3 * dim);
  const TensorShape big{3, spec.sites + 1};
  for (int j = 1; j <= spec.sites; ++j) {
    const Matrix r = r_matrix(u - spec.th(j), spec.r_params());
    full = embed_two_site_operator(r, 1, j + 1, big) * full;
  }
  const auto t = Monodromy::evaluate(spec, u);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK((t.entry(i, j) - full.block((i - 1) * dim, (j - 1) * dim, dim, dim)).norm() < 1e-13);
}

TEST_CASE("analytic derivative of the monodromy") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const Complex u{0.25, -0.15};
  const double h = 1e-5;
  const auto jet = MonodromyJet::evaluate(spec, u);
  const auto plus = Monodromy::evaluate(spec, u + h);
  const auto minus = Monodromy::evaluate(spec, u - h);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Matrix fd = (plus.entry(i, j) - minus.entry(i, j)) / (2.0 * h);
      CHECK((jet.derivative.entry(i, j) - fd).norm() < 1e-8);
      CHECK((jet.value.entry(i, j) - monodromy_entry(u, i, j, spec)).norm() < 1e-15);
    }
  }
  const Matrix fd_t = (transfer(u + h, spec) - transfer(u - h, spec)) / (2.0 * h);
  CHECK((transfer_derivative(u, spec) - fd_t).norm() < 1e-8);
}

TEST_CASE("su(3) transfer matrix is B2 + D23 + C3") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const auto t = Monodromy::evaluate(spec, {0.1, 0.2});
  CHECK((t.twisted_trace() - (t.B(2) + t.D(2, 3) + t.C(3))).norm() < 1e-14);
  CHECK((transfer({0.1, 0.2}, spec) - t.twisted_trace()).norm() < 1e-14);
}

TEST_CASE("transfer matrices commute with each other and with U(g)") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    const ChainSpec spec = default_generic_spec(n, 3);
    const Operator ug = twist_operator(spec);
    for (int k = 0; k < 3; ++k) {
      const Operator a = transfer(random_point(rng), spec);
      const Operator b = transfer(random_point(rng), spec);
      const double scale = a.norm() * b.norm();
      CHECK((a * b - b * a).norm() / scale < 1e-13);
      CHECK((a * ug - ug * a).norm() / a.norm() < 1e-13);
    }
  }
}

TEST_CASE("scalar functions") {
  const ChainSpec spec = default_generic_spec(3, 3);
  const Complex u{0.4, 0.1};
  Complex a{1.0}, d{1.0};
  for (int l = 1; l <= 3; ++l) {
    a *= std::sinh(u - spec.th(l) + spec.eta);
    d *= std::sinh(u - spec.th(l));
  }
  CHECK(rel(scalar_a(u, spec), a) < 1e-15);
  CHECK(rel(scalar_d(u, spec), d) < 1e-15);
  CHECK(rel(scalar_d(u, spec), scalar_a(u - spec.eta, spec)) < 1e-15);
  CHECK(rel(scalar_d_l(u, 2, spec) * std::sinh(u - spec.th(2)), d) < 1e-15);
}

TEST_CASE("vacuum actions") {
  const ChainSpec spec = default_generic_spec(3, 3);
  const Complex u{0.2, -0.3};
  const auto t = Monodromy::evaluate(spec, u);
  const StateVector vac = reference_state(spec);
  const Complex a = scalar_a(u, spec);
  const Complex d = scalar_d(u, spec);
  CHECK((t.A() * vac - a * vac).norm() < 1e-13);
  CHECK((t.A().transpose() * vac - a * vac).norm() < 1e-13);
  for (int i = 2; i <= 3; ++i) {
    CHECK((t.C(i) * vac).norm() < 1e-14);
    CHECK((t.B(i).transpose() * vac).norm() < 1e-14);
    CHECK((t.B(i) * vac).norm() > 1e-3);
    CHECK((t.C(i).transpose() * vac).norm() > 1e-3);
    for (int j = 2; j <= 3; ++j) {
      const Complex want = i == j ? d : Complex{};
      CHECK((t.D(i, j) * vac - want * vac).norm() < 1e-13);
    }
  }
}

TEST_CASE("twist maps the reference state to the barred reference state") {
  const ChainSpec spec = default_generic_spec(3, 3);
  const Operator ug = twist_operator(spec);
  const StateVector bar = bar_reference_state(spec);
  // <0| U(g) = <0̄|
  CHECK((ug.transpose() * reference_state(spec) - bar).norm() < 1e-15);
  CHECK((ug * ug * ug - Operator::Identity(27, 27)).norm() < 1e-15);
}

TEST_CASE("C3 chain from the reference state to the barred state") {
  const ChainSpec spec = default_generic_spec(3, 3);
  StateVector bra = reference_state(spec);
  Complex a_product{1.0};
  for (int k = 1; k <= 3; ++k) {
    bra = Monodromy::evaluate(spec, spec.th(k)).C(3).transpose() * bra;
    a_product *= scalar_a(spec.th(k), spec);
  }
  CHECK(rel(bilinear_pair(bra, bar_reference_state(spec)), a_product) < 1e-13);
}

TEST_CASE("product of transfer matrices at the inhomogeneities") {
  for (int sites = 1; sites <= 4; ++sites) {
    CAPTURE(sites);
    CHECK(check_product_identity(default_generic_spec(3, sites), 1e-10).passed);
  }
}

TEST_CASE("Hamiltonian is the logarithmic derivative of the homogeneous transfer matrix") {
  for (int sites = 2; sites <= 3; ++sites) {
    CAPTURE(sites);
    const auto r = check_hamiltonian(3, sites, {0.5, 0.0}, 1e-8);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS((void)global_hamiltonian(3, 1, {0.5, 0.0}), DimensionError);
}

TEST_CASE("Hamiltonian commutes with the homogeneous transfer matrix") {
  const ChainSpec spec = homogeneous_spec(3, 3);
  const Operator h = global_hamiltonian(3, 3, spec.eta);
  const Operator t = transfer({0.3, 0.2}, spec);
  CHECK((h * t - t * h).norm() / (h.norm() * t.norm()) < 1e-13);
}

TEST_CASE("exchange relations and commuting transfer certificates") {
  const CheckOptions options;
  for (int sites = 2; sites <= 3; ++sites) {
    CAPTURE(sites);
    const ChainSpec spec = default_generic_spec(3, sites);
    CHECK(check_exchange_relations(spec, options, 1e-11).passed);
    CHECK(check_commuting_transfer(spec, options, 1e-11).passed);
    CHECK(check_vacuum_actions(spec, options, 1e-11).passed);
  }
}

TEST_CASE("genericity is enforced with a message naming the invariant") {
  ChainSpec spec = default_generic_spec(3, 3);
  spec.theta[2] = spec.theta[0];
  CHECK_THROWS_WITH_AS(require_generic(spec), doctest::Contains("distinct"), SpecError);
  spec.theta[2] = spec.theta[0] + spec.eta;
  CHECK_THROWS_WITH_AS(require_generic(spec), doctest::Contains("eta"), SpecError);
  spec.theta.pop_back();
  CHECK_THROWS_AS(validate_shape(spec), SpecError);
  CHECK_THROWS_AS((void)default_generic_spec(3, 7), DimensionError);
}
