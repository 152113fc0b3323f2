#include <doctest.h>

#include <hqc/quadrature.hpp>

#include <cmath>
#include <numbers>

using namespace hqc;

TEST_CASE("smooth integrands") {
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14);
  CHECK(r.converged);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-14);
  const auto c = integrate([](double) { return 1.0; }, 0.0, 0.3, 1e-14);
  CHECK(std::abs(c.value - 0.3) < 1e-16);
  const auto p = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 2.0, 1e-13);
  CHECK(std::abs(p.value - std::sin(80.0) / 40.0) < 1e-13);
}

TEST_CASE("endpoint blow-up") {
  // (1 + x)/(1 - x)^3 integrates to x/(1 - x)^2.
  const auto f = [](double x) { return (1.0 + x) / std::pow(1.0 - x, 3); };
  for (double b : {0.5, 0.9, 0.99, 0.999}) {
    const double exact = b / ((1.0 - b) * (1.0 - b));
    const auto r = integrate_clustered(f, b, 1e-12, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - exact) <= 1e-11 * exact);
  }
}

TEST_CASE("tolerance tightening improves the error") {
  const auto f = [](double x) { return 1.0 / std::sqrt(1.0 - x); };
  const double exact = 2.0 - 2.0 * std::sqrt(1e-3);
  double prev = 1.0;
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double err = std::abs(integrate(f, 0.0, 0.999, tol, 0.0).value - exact);
    CHECK(err <= std::max(prev, 1e-15));
    CHECK(err <= 2.0 * tol);
    prev = err;
  }
}

TEST_CASE("budget exhaustion is flagged") {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-15, 0.0, 3);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value));
}

TEST_CASE("geometric breaks") {
  const auto b = geometric_breaks(0.999);
  CHECK(b.back() == 0.999);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] > b[i - 1]);
  CHECK(b.front() >= 0.0);
}

TEST_CASE("periodic trapezoid") {
  const double m = periodic_mean([](double t) { return 1.0 / (1.25 - std::cos(t)); }, 64);
  CHECK(std::abs(m - 1.0 / std::sqrt(1.25 * 1.25 - 1.0)) < 1e-14);
}
