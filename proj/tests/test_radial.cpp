#include <doctest.h>

#include <hqc/radial.hpp>
#include <hqc/transforms.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace hqc;

namespace {

constexpr double kPi = std::numbers::pi;

MapDescriptor identity_map() { return {AnalyticPart::identity(), AnalyticPart::zero(), "identity", {.sh0 = true, .convex = true}}; }
MapDescriptor koebe_map() { return {AnalyticPart::koebe(), AnalyticPart::zero(), "koebe", {.sh0 = true, .starlike = true}}; }
MapDescriptor halfplane_map() {
  return {AnalyticPart::halfplane(), AnalyticPart::zero(), "halfplane", {.sh0 = true, .convex = true}};
}

double k_real(double r) { return r / ((1.0 - r) * (1.0 - r)); }

}  // namespace

TEST_CASE("radial length closed forms") {
  for (double t : {0.0, 1.0, 2.5, -2.0})
    for (double r : {0.1, 0.5, 0.9, 0.999}) CHECK(std::abs(radial_length(identity_map(), t, r).value - r) < 1e-14);
  CHECK(radial_length(koebe_map(), 0.0, 0.5).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(radial_length(halfplane_map(), 0.0, 0.5).value == doctest::Approx(1.0).epsilon(1e-12));
  for (double r : {0.9, 0.99, 0.999}) {
    const QuadResult q = radial_length(koebe_map(), 0.0, r);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(k_real(r)).epsilon(1e-10));
  }
  CHECK(radial_length(identity_map(), 0.0, 0.0).value == 0.0);
  CHECK_THROWS_AS(radial_length(identity_map(), 0.0, 1.0), DomainError);
}

TEST_CASE("shear family radial lengths") {
  for (double K : {1.0, 2.0, 3.0, 10.0}) {
    const MapDescriptor s = shear_qc(AnalyticPart::koebe(), K);
    for (double r : {0.3, 0.5, 0.9}) {
      const double lk = radial_length(koebe_map(), 0.0, r).value;
      const double ls = radial_length(s, 0.0, r).value;
      CHECK(std::abs(ls - 2.0 * K / (K + 1.0) * lk) <= 1e-8 * ls);
      CHECK(ls >= 2.0 / (K + 1.0) * lk);
      // Off the axis the lower bound still holds.
      CHECK(radial_length(s, 1.3, r).value >= 2.0 / (K + 1.0) * radial_length(koebe_map(), 1.3, r).value);
    }
  }
}

TEST_CASE("psi") {
  CHECK(psi(0.0) == 0.0);
  CHECK(psi(1.0 - 1.0 / std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(psi(0.9) == doctest::Approx(1.5174271).epsilon(1e-7));
  CHECK_THROWS_AS(psi(1.0), DomainError);
  CHECK_THROWS_AS(psi(-0.1), DomainError);
}

TEST_CASE("running maximum") {
  CHECK(m_f(identity_map(), 0.7, 1.0) == doctest::Approx(0.7).epsilon(1e-14));
  for (double r : {0.3, 0.8, 0.99}) {
    CHECK(m_f(koebe_map(), r, 0.0) == doctest::Approx(k_real(r)).epsilon(1e-12));
    CHECK(m_f(koebe_map(), r, kPi) == doctest::Approx(r / ((1.0 + r) * (1.0 + r))).epsilon(1e-12));
  }
  // |f| along this ray rises then falls; the maximum is interior.
  const MapDescriptor bump(AnalyticPart::polynomial({0.0, 1.0, -0.6}), AnalyticPart::zero(), "bump");
  const double peak = 1.0 / 1.2;  // argmax of x - 0.6 x^2
  CHECK(m_f(bump, 0.99, 0.0, 16) == doctest::Approx(peak - 0.6 * peak * peak).epsilon(1e-12));
}

TEST_CASE("growth ratio") {
  const auto grid = default_r_grid();
  CHECK(grid.size() == 24);
  CHECK(grid.front() == doctest::Approx(0.5));
  CHECK(grid.back() == doctest::Approx(0.999));
  const RadialProfile k = growth_ratio(koebe_map(), 0.0, grid);
  for (const auto& row : k.rows) CHECK(std::abs(row.ratio - 1.0 / psi(row.r)) <= 1e-6 * row.ratio);
  CHECK(k.bounded);
  CHECK(k.monotone);
  for (std::size_t i = 1; i < k.rows.size(); ++i) CHECK(k.rows[i].ratio < k.rows[i - 1].ratio);

  const RadialProfile id = growth_ratio(identity_map(), 0.7, grid);
  for (const auto& row : id.rows) CHECK(row.ratio == doctest::Approx(1.0 / psi(row.r)).epsilon(1e-12));

  const MapDescriptor s = shear_qc(AnalyticPart::koebe(), 3.0);
  const RadialProfile sp = growth_ratio(s, 0.0, grid);
  CHECK(sp.bounded);
  for (const auto& row : sp.rows) {
    CHECK(row.ell >= row.abs_f * (1.0 - 1e-12));
    CHECK(row.ratio == doctest::Approx(1.0 / psi(row.r)).epsilon(1e-8));
  }
}

TEST_CASE("keogh ratio for bounded maps") {
  const RadialProfile p = keogh_ratio(identity_map(), 0.0, default_r_grid(), 1.0);
  for (const auto& row : p.rows) CHECK(row.ratio == doctest::Approx(row.r / psi(row.r)).epsilon(1e-12));
  CHECK_THROWS_AS(keogh_ratio(identity_map(), 0.0, default_r_grid(), 0.0), ParameterError);
}

TEST_CASE("classical bounds") {
  const ClassicalBounds k = classical_bounds(koebe_map(), 0.0, 0.8);
  CHECK(k.checked);
  CHECK(k.ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(*k.starlike_bound == doctest::Approx(1.8));
  CHECK(k.pass);
  const ClassicalBounds h = classical_bounds(halfplane_map(), 0.0, 0.8);
  CHECK(h.ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(*h.convex_bound == doctest::Approx(std::asin(0.8) / 0.8));
  CHECK(h.pass);
  const ClassicalBounds i = classical_bounds(identity_map(), 2.0, 0.5);
  CHECK(i.ratio == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(i.pass);
  const MapDescriptor plain(AnalyticPart::identity(), AnalyticPart::zero(), "plain");
  CHECK_FALSE(classical_bounds(plain, 0.0, 0.5).checked);
}

TEST_CASE("lower growth bound on the analytic subfamily") {
  // |f(z)| >= [1 - ((1-|z|)/(1+|z|))^2] / 4 with equality for koebe on the negative axis.
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const double lower = (1.0 - std::pow((1.0 - r) / (1.0 + r), 2)) / 4.0;
    CHECK(std::abs(koebe_map().eval(-r)) == doctest::Approx(lower).epsilon(1e-12));
    for (double t : {0.0, 1.0, 2.0, 3.0}) {
      CHECK(std::abs(identity_map().eval(std::polar(r, t))) >= lower);
      CHECK(std::abs(halfplane_map().eval(std::polar(r, t))) >= lower - 1e-15);
      CHECK(radial_length(koebe_map(), t, r).value >= std::abs(koebe_map().eval(std::polar(r, t))) * (1 - 1e-12));
    }
  }
}

TEST_CASE("profile csv") {
  std::ostringstream os;
  write_csv(os, growth_ratio(identity_map(), 0.0, {0.5, 0.9}));
  const std::string s = os.str();
  CHECK(s.rfind("theta,r,ell,abs_f,m_f,psi,ratio,quad_err\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 3);
}
