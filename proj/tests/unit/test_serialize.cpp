#include <doctest.h>

#include "test_support.hpp"

using namespace spintorus;

TEST_CASE("complex values round-trip exactly") {
  const Complex z{0.1 + 0.2, -1.0 / 3.0};
  const Json j = complex_json(z);
  CHECK(j.is_array());
  CHECK(complex_from_json(Json::parse(j.dump())) == z);
  CHECK(complex_from_json(Json(2.5)) == Complex(2.5, 0.0));
  CHECK_THROWS_AS((void)complex_from_json(Json("x")), SpecError);
  CHECK_THROWS_AS((void)complex_from_json(Json::array({1.0})), SpecError);
}

TEST_CASE("non-finite values become null") {
  const Json j = complex_json({std::numeric_limits<double>::infinity(), 0.0});
  CHECK(j[0].is_null());
}

TEST_CASE("state vectors round-trip exactly") {
  std::mt19937_64 rng(9);
  const StateVector v = spintorus::test::random_matrix(rng, 9, 1).col(0);
  CHECK((state_from_json(Json::parse(dump(state_json(v)))) - v).norm() == 0.0);
}

TEST_CASE("TQ solutions round-trip exactly") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const auto s = bae_seeds(spec, {}).front();
  CHECK(solution_from_json(Json::parse(dump(solution_json(s)))).pack() == s.pack());
}

TEST_CASE("dump is stable and newline terminated") {
  const ChainSpec spec = default_generic_spec(3, 2);
  const std::string a = dump(spec_json(spec));
  CHECK(a == dump(spec_json(spec)));
  CHECK(a.back() == '\n');
  const Json table = basis_table_json(spec);
  CHECK(table.size() == 9);
}
