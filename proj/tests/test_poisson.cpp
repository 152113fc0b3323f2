#include <doctest.h>

#include <hqc/poisson.hpp>
#include <hqc/transforms.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace hqc;

namespace {

constexpr double kPi = std::numbers::pi;

MapDescriptor identity_map() { return {AnalyticPart::identity(), AnalyticPart::zero(), "identity", {.sh0 = true}}; }
MapDescriptor koebe_map() { return {AnalyticPart::koebe(), AnalyticPart::zero(), "koebe", {.sh0 = true}}; }
MapDescriptor quad_map() {
  return {AnalyticPart::polynomial({0.0, 1.0, 0.125}), AnalyticPart::zero(), "z+z^2/8", {.sh0 = true}};
}

}  // namespace

TEST_CASE("boundary profile") {
  const BoundaryProfile p = boundary_profile(identity_map(), 1e-3, 256);
  CHECK(p.values.size() == 256);
  for (double v : p.values) CHECK(v == 1.0);
  CHECK(p.converged);
  CHECK(p.drift == 0.0);
  CHECK_THROWS_AS(boundary_profile(identity_map(), 1e-3, 300), ParameterError);
  CHECK_THROWS_AS(boundary_profile(identity_map(), 1e-3, 128), ParameterError);
  CHECK_THROWS_AS(boundary_profile(identity_map(), 0.0, 256), ParameterError);
  CHECK_FALSE(boundary_profile(koebe_map(), 1e-3, 1024).converged);
}

TEST_CASE("poisson functional normalization") {
  const BoundaryProfile p = boundary_profile(identity_map(), 1e-3, 2048);
  CHECK(std::abs(poisson_functional(identity_map(), 0.0, p) - 1.0) < 1e-12);
  CHECK(std::abs(poisson_functional(identity_map(), 0.5, p) - 1.0) < 1e-12);
  for (cplx z : disk_grid({4, 6}, 0.9).points) CHECK(std::abs(poisson_functional(identity_map(), z, p) - 1.0) < 1e-6);

  const MapDescriptor s = shear_qc(AnalyticPart::identity(), 3.0);
  const BoundaryProfile ps = boundary_profile(s, 1e-3, 2048);
  for (cplx z : {cplx(0.0), cplx(0.3, -0.6), cplx(-0.9)}) CHECK(std::abs(poisson_functional(s, z, ps) - 1.0) < 1e-6);

  CHECK_THROWS_AS(poisson_functional(identity_map(), 0.9985, p), PrecisionError);
}

TEST_CASE("poisson functional ignores positive rescaling") {
  const MapDescriptor q = quad_map();
  const MapDescriptor q3(AnalyticPart::polynomial({0.0, 3.0, 0.375}), AnalyticPart::zero(), "3q");
  const BoundaryProfile a = boundary_profile(q, 1e-2, 1024), b = boundary_profile(q3, 1e-2, 1024);
  for (cplx z : disk_grid({3, 6}, 0.9).points) {
    const double fa = poisson_functional(q, z, a), fb = poisson_functional(q3, z, b);
    CHECK(std::abs(fa - fb) <= 1e-12 * fa);
  }
}

TEST_CASE("poisson sup traces") {
  CHECK(ring_samples(1e-2) == 8192);
  CHECK(ring_samples(0.5) == 256);
  const PoissonTrace id = poisson_sup(identity_map(), {4, 8}, {1e-2, 1e-3});
  CHECK(id.stable);
  for (const auto& l : id.levels) CHECK(std::abs(l.sup - 1.0) < 1e-9);

  const PoissonTrace q = poisson_sup(quad_map(), {4, 8}, {1e-2, 1e-3, 1e-4});
  CHECK(q.stable);
  CHECK_FALSE(q.growing);
  CHECK(q.sup < 2.0);

  const PoissonTrace k = poisson_sup(koebe_map(), {4, 8}, {1e-2, 1e-3, 1e-4});
  CHECK(k.growing);
  CHECK_FALSE(k.stable);
  for (std::size_t i = 1; i < k.levels.size(); ++i) CHECK(k.levels[i].sup > 10.0 * k.levels[i - 1].sup);
}

TEST_CASE("hardy means") {
  for (double p : {0.5, 1.0, 2.0})
    for (double r : {0.2, 0.9}) {
      CHECK(hardy_mean([](cplx) { return 1.0; }, p, r) == doctest::Approx(1.0));
      CHECK(hardy_mean([](cplx) { return 2.5; }, p, r) == doctest::Approx(2.5));
      CHECK(hardy_mean(identity_map(), p, r) == doctest::Approx(r));
    }
  const auto kd = [](cplx z) { return std::abs(AnalyticPart::koebe().derivative(z)); };
  double prev = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double m = hardy_mean(kd, 1.0, r, 4096);
    CHECK(m > prev);
    prev = m;
  }
  // M_2 of k' at radius r: sum n^4 r^{2(n-1)}, checked at r = 0.5.
  double series = 0.0;
  for (int n = 1; n < 200; ++n) series += std::pow(n, 4) * std::pow(0.25, n - 1);
  CHECK(hardy_mean(kd, 2.0, 0.5, 1024) == doctest::Approx(std::sqrt(series)).epsilon(1e-12));
  CHECK_THROWS_AS(hardy_mean(identity_map(), 0.0, 0.5), ParameterError);
  CHECK_THROWS_AS(hardy_mean(identity_map(), 1.0, 1.0), DomainError);
}

TEST_CASE("arc and distance bracket") {
  const PommerenkeBracket anti = pommerenke_bracket(identity_map(), 0.9, 0.0, kPi);
  CHECK(anti.arc_length == doctest::Approx(0.9 * kPi).epsilon(1e-12));
  CHECK(anti.chord == doctest::Approx(1.8).epsilon(1e-14));
  CHECK(anti.upper == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  CHECK(anti.lower <= anti.upper);

  const PommerenkeBracket b = pommerenke_bracket(identity_map(), 0.7, 0.3, 1.4);
  CHECK(b.arc_length == doctest::Approx(0.7 * 1.1).epsilon(1e-12));
  CHECK(b.upper <= kPi / 2.0);
  // The smaller arc is used across the branch cut.
  const PommerenkeBracket wrap = pommerenke_bracket(identity_map(), 0.5, 3.0, -3.0);
  CHECK(wrap.arc_length == doctest::Approx(0.5 * (2.0 * kPi - 6.0)).epsilon(1e-12));

  const PommerenkeBracket z = pommerenke_bracket(identity_map(), 0.5, 1.0, 1.0);
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
}

TEST_CASE("poisson csv") {
  std::ostringstream os;
  write_poisson_csv(os, identity_map(), circle_sample(0.5, 3), boundary_profile(identity_map(), 1e-2, 256));
  const std::string s = os.str();
  CHECK(s.rfind("zeta_re,zeta_im,functional,eps,n\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}
