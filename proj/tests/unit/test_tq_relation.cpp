#include <doctest.h>

#include "test_support.hpp"

using namespace spintorus;
using spintorus::test::random_point;
using spintorus::test::rel;

namespace {

TEST_CASE("pack and unpack are inverse") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const auto seeds = bae_seeds(spec, {});
  REQUIRE(seeds.size() == 200);
  const auto x = seeds[7].pack();
  CHECK(x.size() == 12);
  const auto back = TQSolution::unpack(x, 2);
  CHECK(back.pack() == x);
  CHECK_THROWS_AS((void)TQSolution::unpack(std::span(x).first(11), 2), DimensionError);
}

TEST_CASE("seeds are deterministic and depend on the rng seed") {
  const ChainSpec spec = default_generic_spec(3, 1);
  BaeOptions options;
  options.seeds = 5;
  const auto a = bae_seeds(spec, options);
  const auto b = bae_seeds(spec, options);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].pack() == b[k].pack());
  options.rng_seed += 1;
  CHECK(bae_seeds(spec, options)[0].pack() != a[0].pack());
}

TEST_CASE("Q function") {
  const std::vector<Complex> roots{{0.1, 0.2}, {-0.3, 0.05}};
  const Complex u{0.4, -0.1};
  CHECK(rel(q_function(roots, u), std::sinh(u - roots[0]) * std::sinh(u - roots[1])) < 1e-15);
  CHECK(q_function({}, u) == Complex(1.0));
}

TEST_CASE("solutions are compared modulo i pi shifts of roots") {
  const ChainSpec spec = default_generic_spec(3, 1);
  const auto seed = bae_seeds(spec, {}).front();
  TQSolution shifted = seed;
  shifted.roots[2][0] += Complex(0.0, 3.14159265358979323846);
  shifted.f1_plus = -shifted.f1_plus;
  CHECK(same_solution(seed, shifted, 1e-9));
  TQSolution moved = seed;
  moved.roots[0][0] += 0.01;
  CHECK_FALSE(same_solution(seed, moved, 1e-9));
}

TEST_CASE("one-site BAE solutions reproduce every eigenvalue") {
  const ChainSpec spec = default_generic_spec(3, 1);
  const auto records = brute_force_spectrum(spec);
  const auto report = solve_bae(spec, records);
  CHECK(report.unmatched == 0);
  CHECK(report.matched_records.size() == 3);
  CHECK(report.sectors_covered == std::array<bool, 3>{true, true, true});
  CHECK(report.coverage() == 1.0);
  CHECK(report.seed_residuals.size() == 200);

  std::mt19937_64 rng(21);
  for (const auto& s : report.solutions) {
    CHECK(s.residual < 1e-10);
    const auto res = bae_residuals(s.solution, spec);
    double worst = 0.0;
    for (const auto& r : res) worst = std::max(worst, std::abs(r));
    CHECK(worst < 1e-10);
    const auto& record = records[static_cast<std::size_t>(s.record)];
    CHECK(s.z_charge == record.z_charge);
    for (int k = 0; k < 10; ++k) {
      const Complex u = random_point(rng, 2.0);
      CHECK(std::abs(tq_lambda(u, s.solution, spec) - eigenvalue_at(record, u, spec)) <
            1e-6 * std::max(1.0, record.scale));
    }
  }
}

TEST_CASE("two-site BAE solutions that survive selection are eigenvalues") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const auto records = brute_force_spectrum(spec);
  const auto report = solve_bae(spec, records);
  CHECK(report.unmatched == 0);
  CHECK(report.distinct_converged == static_cast<int>(report.solutions.size()) + report.rejected_pole +
                                         report.rejected_selection + report.unmatched);
  for (const auto& s : report.solutions) CHECK(s.match_error < 1e-7);
}

TEST_CASE("Newton converges back onto a perturbed solution") {
  const ChainSpec spec = default_generic_spec(3, 1);
  const auto report = solve_bae(spec, brute_force_spectrum(spec));
  REQUIRE_FALSE(report.solutions.empty());
  auto x = report.solutions.front().solution.pack();
  for (auto& v : x) v += Complex(1e-4, -1e-4);
  const auto out = newton_solve(TQSolution::unpack(x, 1), spec);
  CHECK(out.converged);
  CHECK(out.residual < 1e-10);
  CHECK(same_solution(out.solution, report.solutions.front().solution, 1e-7));
}

TEST_CASE("scaling track stays converged") {
  const ChainSpec spec = default_generic_spec(3, 1);
  const auto report = solve_bae(spec, brute_force_spectrum(spec));
  REQUIRE_FALSE(report.solutions.empty());
  const auto track = track_scaling(report.solutions.front().solution, spec, {1.0, 0.5, 0.1});
  REQUIRE(track.size() == 3);
  for (const auto& o : track) CHECK(o.converged);
}

TEST_CASE("solver limits") {
  const ChainSpec spec = default_generic_spec(3, 3);
  CHECK_THROWS_AS((void)solve_bae(spec, {}), DimensionError);
  CHECK_THROWS_AS((void)solve_bae(default_generic_spec(2, 1), {}), SpecError);
}

}  // namespace
