#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace spintorus;
using spintorus::test::random_point;
using spintorus::test::rel;

TEST_CASE("label construction and validation") {
  const auto idx = BasisIndex::from_blocks({3, 1}, {2});
  CHECK(idx.m == 3);
  CHECK(idx.m2 == 2);
  CHECK(idx.p == std::vector<int>{1, 3, 2});
  CHECK(idx.label() == "(1,3;2)");
  CHECK(idx.contains(2));
  CHECK_FALSE(idx.contains(4));
  CHECK_NOTHROW(idx.validate(3));
  CHECK_THROWS_AS(idx.validate(2), IndexError);
  CHECK_THROWS_AS((void)BasisIndex::from_blocks({1}, {1}), IndexError);
  const BasisIndex unsorted{2, 2, {2, 1}};
  CHECK_THROWS_AS(unsorted.validate(3), IndexError);
  const BasisIndex bad_counts{1, 2, {1}};
  CHECK_THROWS_AS(bad_counts.validate(3), IndexError);
}

TEST_CASE("enumeration yields 3^N distinct labels") {
  for (int sites = 1; sites <= 4; ++sites) {
    const auto labels = enumerate_basis(sites);
    CHECK(labels.size() == static_cast<std::size_t>(std::pow(3, sites)));
    CHECK(std::is_sorted(labels.begin(), labels.end()));
    CHECK(std::set<BasisIndex>(labels.begin(), labels.end()).size() == labels.size());
    for (const auto& l : labels) CHECK_NOTHROW(l.validate(sites));
  }
  CHECK(enumerate_basis(2).front().m == 0);
}

TEST_CASE("empty label gives the reference states") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const BasisIndex empty{};
  CHECK((left_state(empty, spec) - reference_state(spec)).norm() == 0.0);
  CHECK((right_state(empty, spec) - reference_state(spec)).norm() == 0.0);
  CHECK(g_factor(empty, spec) == Complex(1.0));
}

TEST_CASE("Gram matrix is diagonal with the closed-form normalization") {
  for (int sites = 1; sites <= 3; ++sites) {
    CAPTURE(sites);
    const auto r = verify_orthogonality(default_generic_spec(3, sites));
    CHECK(r.basis_size == static_cast<std::size_t>(std::pow(3, sites)));
    CHECK(r.max_diagonal_error < 1e-9);
    CHECK(r.max_offdiagonal < 1e-11);
    CHECK(r.identity_resolution_error < 1e-9);
    CHECK(r.min_abs_g_factor > 0.0);
  }
}

TEST_CASE("orthogonality holds at a complex eta") {
  const ChainSpec spec{3, 2, {0.4, 0.3}, {{0.2, -0.1}, {-0.35, 0.25}}};
  const auto r = verify_orthogonality(spec);
  CHECK(r.max_diagonal_error < 1e-9);
  CHECK(r.max_offdiagonal < 1e-11);
}

TEST_CASE("D33 is diagonal on left basis states") {
  const ChainSpec spec = default_generic_spec(3, 3);
  std::mt19937_64 rng(11);
  const Complex u = random_point(rng);
  const auto t = Monodromy::evaluate(spec, u);
  for (const auto& idx : enumerate_basis(3)) {
    const StateVector l = left_state(idx, spec);
    const StateVector acted = t.D(3, 3).transpose() * l;
    CHECK((acted - d33_eigenvalue(u, idx, spec) * l).norm() / std::max(1.0, acted.norm()) < 1e-11);
  }
}

TEST_CASE("bra decompositions reproduce direct action") {
  std::mt19937_64 rng(12);
  for (int sites = 2; sites <= 3; ++sites) {
    const ChainSpec spec = default_generic_spec(3, sites);
    const SovBasis basis(spec);
    const Complex u = random_point(rng, 2.0);
    const auto t = Monodromy::evaluate(spec, u);
    for (const auto& idx : enumerate_basis(sites)) {
      for (const auto op : kBasisOperators) {
        CAPTURE(idx.label());
        CAPTURE(to_string(op));
        const StateVector direct = operator_entry(op, t).transpose() * basis.left_state(idx);
        const StateVector expanded = expand(act_on_bra(op, u, idx, spec), basis);
        CHECK((direct - expanded).norm() / std::max(1.0, direct.norm()) < 1e-9);
      }
    }
  }
}

TEST_CASE("decompositions are regular at the inhomogeneities") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const SovBasis basis(spec);
  const auto idx = BasisIndex::from_blocks({1}, {});
  for (const auto op : kBasisOperators) {
    const Complex u = spec.th(1);
    const StateVector direct = operator_entry(op, basis.at_theta(1)).transpose() * basis.left_state(idx);
    CHECK((direct - expand(act_on_bra(op, u, idx, spec), basis)).norm() < 1e-11 * std::max(1.0, direct.norm()));
  }
}

TEST_CASE("D33 and B3 at a free inhomogeneity annihilate the bra") {
  const ChainSpec spec = default_generic_spec(3, 3);
  const SovBasis basis(spec);
  const auto idx = BasisIndex::from_blocks({1}, {3});
  for (const auto op : {BasisOperator::D33, BasisOperator::B3}) {
    CHECK(act_on_bra(op, spec.th(2), idx, spec).empty());
    const StateVector v = operator_entry(op, basis.at_theta(2)).transpose() * basis.left_state(idx);
    CHECK(v.norm() < 1e-12 * std::max(1.0, basis.left_state(idx).norm()));
  }
  const auto t = basis.at_theta(2);
  const StateVector r = basis.right_state(idx);
  CHECK((t.C(3) * r).norm() < 1e-12 * std::max(1.0, r.norm()));
  CHECK((t.D(2, 2) * r).norm() < 1e-12 * std::max(1.0, r.norm()));
}

TEST_CASE("decomposition certificate") {
  const CheckOptions options;
  CHECK(check_decompositions(default_generic_spec(3, 2), options, 1e-9, 1e-11).passed);
}

TEST_CASE("basis requires su(3) and a generic spec") {
  CHECK_THROWS_AS(SovBasis(default_generic_spec(4, 2)), SpecError);
  CHECK_THROWS_AS(SovBasis(homogeneous_spec(3, 2)), SpecError);
  CHECK_THROWS_AS((void)verify_orthogonality(default_generic_spec(3, 5)), DimensionError);
}

TEST_CASE("su(n) labels") {
  const auto idx = SunBasisIndex::from_counts(4, 3, {1, 0, 2}, {2, 1, 3});
  CHECK(idx.blocks.size() == 3);
  CHECK(idx.blocks[2] == std::vector<int>{1, 3});
  CHECK_THROWS_AS((void)SunBasisIndex::from_counts(4, 3, {1, 1}, {1, 2}), IndexError);
  CHECK_THROWS_AS((void)SunBasisIndex::from_counts(4, 3, {1, 1, 0}, {2, 2}), IndexError);
  CHECK(enumerate_sun_basis(4, 2).size() == 16);
  CHECK(enumerate_sun_basis(2, 3).size() == 8);
}

TEST_CASE("su(n) basis states are eigenvectors of D^n_n and span the space") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const ChainSpec spec = default_generic_spec(n, 2);
    const Complex u{0.31, -0.22};
    const auto t = Monodromy::evaluate(spec, u);
    const auto labels = enumerate_sun_basis(n, 2);
    Matrix left(spec.dimension(), static_cast<long>(labels.size()));
    Matrix right(spec.dimension(), static_cast<long>(labels.size()));
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const StateVector l = sun_basis_state(labels[k], Side::Left, spec);
      const StateVector acted = t.D(n, n).transpose() * l;
      CHECK((acted - sun_dnn_eigenvalue(u, labels[k], spec) * l).norm() < 1e-11 * std::max(1.0, acted.norm()));
      left.col(static_cast<long>(k)) = l;
      right.col(static_cast<long>(k)) = sun_basis_state(labels[k], Side::Right, spec);
    }
    CHECK(numerical_rank(left) == spec.dimension());
    CHECK(numerical_rank(right) == spec.dimension());
  }
}

TEST_CASE("su(3) nested states agree with the general construction") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const auto idx = BasisIndex::from_blocks({2}, {1});
  const auto sun = SunBasisIndex::from_counts(3, 2, {1, 1}, {2, 1});
  CHECK((left_state(idx, spec) - sun_basis_state(sun, Side::Left, spec)).norm() < 1e-14);
  CHECK((right_state(idx, spec) - sun_basis_state(sun, Side::Right, spec)).norm() < 1e-14);
}
