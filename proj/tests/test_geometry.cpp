#include <doctest.h>

#include <hqc/geometry.hpp>
#include <hqc/hmap.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace hqc;

namespace {

constexpr double kPi = std::numbers::pi;

cplx random_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

}  // namespace

TEST_CASE("hyperbolic distance values") {
  CHECK(hyp_dist(cplx(0.3, 0.2), cplx(0.3, 0.2)) == 0.0);
  CHECK(std::abs(hyp_dist(0.0, 0.5) - std::atanh(0.5)) < 1e-15);
  CHECK(std::abs(hyp_dist(0.5, -0.5) - std::atanh(0.8)) < 1e-15);
  CHECK(hyp_dist(0.5, -0.5) == doctest::Approx(1.0986123).epsilon(1e-7));
  CHECK_THROWS_AS(hyp_dist(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(hyp_dist(0.0, cplx(0.0, -1.2)), DomainError);
}

TEST_CASE("hyperbolic distance is a Moebius-invariant metric") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const cplx a = random_point(rng, 0.99), b = random_point(rng, 0.99), c = random_point(rng, 0.99);
    CHECK(hyp_dist(a, c) <= hyp_dist(a, b) + hyp_dist(b, c) + 1e-12);
    const cplx m = random_point(rng, 0.9);
    CHECK(std::abs(hyp_dist(disk_automorphism(m, a), disk_automorphism(m, b)) - hyp_dist(a, b)) < 1e-10);
  }
}

TEST_CASE("box B(z)") {
  const RegionSample b9 = box_B(0.9, {16, 16});
  double max_angle = 0.0, min_r = 1.0, max_r = 0.0;
  for (cplx w : b9.points) {
    max_angle = std::max(max_angle, std::abs(std::arg(w)));
    min_r = std::min(min_r, std::abs(w));
    max_r = std::max(max_r, std::abs(w));
    CHECK(in_box_B(0.9, w));
  }
  CHECK(max_angle == doctest::Approx(0.1 * kPi).epsilon(1e-12));
  CHECK(min_r == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(max_r < 1.0);

  double half = 0.0;
  for (cplx w : box_B(0.5, {8, 16}).points) half = std::max(half, std::abs(std::arg(w)));
  CHECK(half == doctest::Approx(kPi / 2.0).epsilon(1e-12));

  CHECK(in_box_B(0.9, std::polar(0.95, 0.3)));
  CHECK_FALSE(in_box_B(0.9, std::polar(0.95, 0.32)));
  CHECK_FALSE(in_box_B(0.9, 0.85));

  const RegionSample b0 = box_B(0.0, {8, 16});
  CHECK_FALSE(b0.note.empty());
  for (cplx w : b0.points) CHECK(std::abs(w) < 1.0);
}

TEST_CASE("arc I(a)") {
  const RegionSample arc = arc_I(0.9, 65);
  for (cplx w : arc.points) {
    CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
    CHECK(in_arc_I(0.9, w));
  }
  std::vector<cplx> pts = arc.points;
  CHECK(diameter(pts) == doctest::Approx(2.0 * std::sin(0.1 * kPi)).epsilon(1e-12));
}

TEST_CASE("Stolz-type domain angle bound") {
  const StolzCheck c1 = stolz_angle_check(0.8, 0.2);
  CHECK(c1.in_hull);
  CHECK_FALSE(c1.in_annular_piece);

  // This point sits just outside the hull (apex half-angle asin(1/4) at 0.8), but the bound is still evaluated.
  const StolzCheck c2 = stolz_angle_check(0.8, std::polar(0.6, 0.1));
  CHECK_FALSE(c2.in_hull);
  CHECK(stolz_angle_check(0.8, std::polar(0.6, 0.05)).in_annular_piece);
  CHECK(c2.bound == doctest::Approx(4.0 * kPi * 0.2 / (0.8 * std::sqrt(15.0))).epsilon(1e-12));
  CHECK(c2.bound == doctest::Approx(0.8112).epsilon(1e-4));
  CHECK(c2.bound_satisfied);

  CHECK_FALSE(stolz_angle_check(0.8, 0.85).in_hull);
  CHECK_FALSE(stolz_angle_check(0.8, cplx(0.5, 0.3)).in_hull);

  for (double r : {0.5, 0.8, 0.95}) {
    const RegionSample s = stolz_sample(r, 4000, 11);
    CHECK(s.points.size() == 4000);
    for (cplx z : s.points) {
      const StolzCheck c = stolz_angle_check(r, z);
      CHECK(c.in_annular_piece);
      CHECK(c.bound_satisfied);
      CHECK(std::abs(c.angle) < 3.0 * kPi / std::sqrt(15.0));
    }
  }
}

TEST_CASE("samplers stay inside their regions") {
  const std::vector<RegionSample> regions{box_B(cplx(0.6, 0.3), {8, 8}), arc_I(cplx(-0.7, 0.1), 33),
                                          stolz_sample(0.9, 300, 3), radius_sample(1.1, 0.99, 50),
                                          circle_sample(0.7, 64), boundary_ring(1e-3, 256),
                                          disk_grid({8, 16}, 0.999)};
  for (const auto& region : regions) {
    CHECK_FALSE(region.points.empty());
    for (cplx z : region.points) CHECK(contains(region, z));
  }
  const RegionSample g = disk_grid({24, 48}, 0.999);
  CHECK(g.points.size() == 1 + 24 * 48);
  CHECK(g.points.front() == cplx(0.0));
  double rmax = 0.0;
  for (cplx z : g.points) rmax = std::max(rmax, std::abs(z));
  CHECK(rmax == doctest::Approx(0.999).epsilon(1e-14));
}

TEST_CASE("stolz sampling is seeded") {
  const auto a = stolz_sample(0.8, 100, 42), b = stolz_sample(0.8, 100, 42), c = stolz_sample(0.8, 100, 43);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
}

TEST_CASE("boundary distance") {
  const MapDescriptor id(AnalyticPart::identity(), AnalyticPart::zero(), "identity");
  const auto d0 = boundary_distance(id, 0.0, 1e-4, 4096);
  CHECK(d0.distance == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(d0.converged);
  CHECK(boundary_distance(id, 0.5, 1e-4, 4096).distance == doctest::Approx(0.5).epsilon(1e-3));
  for (cplx w : {cplx(0.3, 0.1), cplx(-0.6, 0.5), cplx(0.0, 0.9)})
    CHECK(std::abs(boundary_distance(id, w, 1e-4, 4096).distance - (1.0 - std::abs(w))) < 1e-3);
  const MapDescriptor two(AnalyticPart::polynomial({0.0, 2.0}), AnalyticPart::zero(), "2z");
  CHECK(boundary_distance(two, 0.0, 1e-4, 4096).distance == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("diameter") {
  std::vector<cplx> pts{0.0, 1.0, cplx(0.0, 1.0), cplx(0.5, 0.5), cplx(0.2, 0.1)};
  CHECK(diameter(pts) == doctest::Approx(std::sqrt(2.0)));
  std::vector<cplx> one{cplx(0.3, 0.3)};
  CHECK(diameter(one) == 0.0);
  std::mt19937_64 rng(5);
  std::vector<cplx> cloud;
  for (int i = 0; i < 300; ++i) cloud.push_back(random_point(rng, 1.0));
  double brute = 0.0;
  for (cplx a : cloud)
    for (cplx b : cloud) brute = std::max(brute, std::abs(a - b));
  CHECK(diameter(cloud) == doctest::Approx(brute).epsilon(1e-14));
}

TEST_CASE("region csv") {
  std::ostringstream os;
  write_csv(os, circle_sample(0.5, 4));
  const std::string s = os.str();
  CHECK(s.rfind("kind,anchor_re,anchor_im,point_re,point_im\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 5);
  CHECK(s.find("circle,") != std::string::npos);
}
