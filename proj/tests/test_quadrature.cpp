#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "gmrfd/errors.hpp"
#include "gmrfd/quadrature.hpp"

using namespace gmrfd;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int order : {1, 2, 3, 8, 16, 31}) {
    const AxisRule r = gauss_legendre(order);
    for (int deg = 0; deg <= 2 * order - 1; ++deg) {
      double sum = 0.0;
      for (int i = 0; i < order; ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("dyadic breakpoints cover [0, pi] with grading toward zero") {
  const auto b = dyadic_breakpoints(3, 1);
  REQUIRE(b.size() == 5);
  CHECK(b[0] == 0.0);
  CHECK(b[1] == std::numbers::pi / 8);
  CHECK(b[4] == std::numbers::pi);
  const auto split = dyadic_breakpoints(3, 4);
  CHECK(split.size() == 17);
  for (std::size_t i = 1; i < split.size(); ++i) CHECK(split[i] > split[i - 1]);
}

TEST_CASE("composite rule integrates smooth functions over graded panels") {
  const auto b = dyadic_breakpoints(7, 2);
  const AxisRule r = composite_rule(b, 16);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::sin(r.nodes[i]);
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  const double total_weight = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
  CHECK(total_weight == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}
