#include <doctest.h>

#include <vector>

#include "fascount/interpolate.hpp"

using namespace fascount;

namespace {

std::vector<mpz_class> z(std::vector<long> v) { return std::vector<mpz_class>(v.begin(), v.end()); }

std::vector<mpq_class> q(std::vector<long> v) { return std::vector<mpq_class>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("constant and linear interpolation") {
  CHECK(interpolate_rational(z({1}), z({5})) == q({5}));
  CHECK(interpolate_rational(z({1, 3}), z({3, 7})) == q({1, 2}));
  CHECK(interpolate_rational(z({0, 1}), z({0, 1})) == q({0, 1}));
}

TEST_CASE("quadratic through spectrum evaluation points") {
  // 2y + y^2 sampled at y = 2^ell - 1
  CHECK(interpolate_rational(z({1, 3, 7}), z({3, 15, 63})) == q({0, 2, 1}));
}

TEST_CASE("fractional coefficients are represented exactly") {
  std::vector<mpq_class> coeff = interpolate_rational(z({0, 2}), z({0, 1}));
  REQUIRE(coeff.size() == 2);
  CHECK(coeff[0] == 0);
  CHECK(coeff[1] == mpq_class(1, 2));
}

TEST_CASE("node order does not matter") {
  CHECK(interpolate_rational(z({7, 1, 3}), z({63, 3, 15})) == q({0, 2, 1}));
}

TEST_CASE("high degree with wide nodes") {
  // p(y) = y^5 at y = 1, 3, 7, 15, 31, 63
  std::vector<mpz_class> nodes, values;
  for (int ell = 1; ell <= 6; ++ell) {
    mpz_class y = (mpz_class(1) << ell) - 1;
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), y.get_mpz_t(), 5);
    nodes.push_back(y);
    values.push_back(v);
  }
  CHECK(interpolate_rational(nodes, values) == q({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(interpolate_rational(z({}), z({})), std::invalid_argument);
  CHECK_THROWS_AS(interpolate_rational(z({1, 2}), z({1})), std::invalid_argument);
  CHECK_THROWS_AS(interpolate_rational(z({1, 1}), z({2, 2})), std::invalid_argument);
}
