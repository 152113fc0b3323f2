#include <doctest.h>

#include <hqc/johndisk.hpp>
#include <hqc/transforms.hpp>

#include <cmath>
#include <numbers>

using namespace hqc;

namespace {

constexpr double kPi = std::numbers::pi;

MapDescriptor identity_map() { return {AnalyticPart::identity(), AnalyticPart::zero(), "identity", {.sh0 = true}}; }
MapDescriptor koebe_map() { return {AnalyticPart::koebe(), AnalyticPart::zero(), "koebe", {.sh0 = true}}; }
MapDescriptor halfplane_map() { return {AnalyticPart::halfplane(), AnalyticPart::zero(), "halfplane", {.sh0 = true}}; }
MapDescriptor quad_map() {
  return {AnalyticPart::polynomial({0.0, 1.0, 0.125}), AnalyticPart::zero(), "z+z^2/8", {.sh0 = true}};
}
MapDescriptor cubic_map() {
  return {AnalyticPart::polynomial({0.0, 1.0, 0.0, 1.0 / 9.0}), AnalyticPart::zero(), "z+z^3/9", {.sh0 = true}};
}

}  // namespace

TEST_CASE("two-radius ratio") {
  const auto grid = ratio_r_grid();
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(0.999));

  // Identity: (1 - rho^2)/(1 - r^2) with rho = (x + r)/(1 + x r) is largest at r = 0.
  for (double x : kRatioXs) {
    const RatioSup s = criterion_ii(identity_map(), x, 16, grid);
    CHECK(s.sup == doctest::Approx(1.0 - x * x).epsilon(1e-14));
    CHECK(s.sup < 1.0);
  }
  // Near the boundary the identity ratio tends to (1 - x)/(1 + x).
  const RatioSup tail = criterion_ii(identity_map(), 0.5, 8, {0.999});
  CHECK(tail.sup == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  // x -> 0 is degenerate.
  CHECK(criterion_ii(quad_map(), 1e-9, 16, grid).sup == doctest::Approx(1.0).epsilon(1e-6));

  for (double x : kRatioXs) {
    CHECK(criterion_ii(koebe_map(), x, 64, grid).sup >= 1.0);
    CHECK(criterion_ii(halfplane_map(), x, 64, grid).sup >= 1.0);
  }
  CHECK(criterion_ii(quad_map(), 0.3, 64, grid).sup < 1.0);
  CHECK(criterion_ii(cubic_map(), 0.3, 64, grid).sup < 1.0);
}

TEST_CASE("two-radius ratio is rotation invariant") {
  const auto grid = ratio_r_grid(24);
  const MapDescriptor base = quad_map();
  const MapDescriptor rot = rotate(base, std::polar(1.0, kPi / 2.0), std::polar(1.0, 0.37));
  for (double x : kRatioXs)
    CHECK(std::abs(criterion_ii(base, x, 64, grid).sup - criterion_ii(rot, x, 64, grid).sup) < 1e-9);
  CHECK_THROWS_AS(criterion_ii(base, 1.0, 8, grid), ParameterError);
}

TEST_CASE("box oscillation") {
  const OscillationTrace id = criterion_iii(identity_map());
  CHECK(id.trace.size() == 3);
  CHECK(id.stable);
  CHECK_FALSE(id.diverging);
  CHECK(id.max_drift < 1e-3);
  CHECK(id.sup == doctest::Approx(std::sqrt(1.0 + kPi * kPi) / 2.0).epsilon(1e-2));

  // B(0) is the whole disk and the ratio at z = 0 is |w|.
  double at0 = 0.0;
  for (cplx w : box_B(0.0, {16, 32}).points) at0 = std::max(at0, std::abs(w));
  CHECK(at0 >= 0.99);
  CHECK(at0 < 1.0);
  CHECK(criterion_iii_level(identity_map(), {1, 1}, {16, 32}, 1e-3) >= at0);

  const MapDescriptor s = shear_qc(AnalyticPart::identity(), 3.0);
  const OscillationTrace st = criterion_iii(s);
  CHECK(st.stable);
  CHECK(st.max_drift < 1e-2);

  const OscillationTrace k = criterion_iii(koebe_map());
  CHECK(k.diverging);
  CHECK_FALSE(k.stable);
  for (std::size_t i = 1; i < k.trace.size(); ++i) CHECK(k.trace[i] >= 1.5 * k.trace[i - 1]);
  CHECK(criterion_iii(halfplane_map()).diverging);
}

TEST_CASE("decay exponent") {
  const DecayFit id = decay_fit(identity_map());
  CHECK(std::abs(id.slope) < 1e-10);
  CHECK(id.delta == doctest::Approx(1.0));
  CHECK(id.C == doctest::Approx(1.0));
  CHECK(id.residual < 1e-10);
  CHECK(id.in_range());

  const DecayFit k = decay_fit(koebe_map());
  CHECK(std::abs(k.slope + 3.0) < 0.05);
  CHECK(k.delta < 0.0);
  CHECK_FALSE(k.in_range());

  const DecayFit h = decay_fit(halfplane_map());
  CHECK(std::abs(h.slope + 2.0) < 0.05);
  CHECK_FALSE(h.in_range());

  CHECK(decay_fit(quad_map()).in_range());
  CHECK(decay_fit(cubic_map()).in_range());
  CHECK_THROWS_AS(decay_fit(identity_map(), 32, 0.4, 0.99), ParameterError);
}

TEST_CASE("verdicts agree") {
  const MapDescriptor s = shear_qc(AnalyticPart::identity(), 3.0);
  for (const auto& m : {identity_map(), s, quad_map(), cubic_map()}) {
    const JohnEstimate e = estimate_john(m);
    CHECK(e.ratio_positive);
    CHECK(e.oscillation_positive);
    CHECK(e.decay_positive);
    CHECK(e.verdict == "john-positive");
  }
  for (const auto& m : {koebe_map(), halfplane_map()}) {
    const JohnEstimate e = estimate_john(m);
    CHECK_FALSE(e.ratio_positive);
    CHECK_FALSE(e.oscillation_positive);
    CHECK_FALSE(e.decay_positive);
    CHECK(e.verdict == "john-negative");
  }
}

TEST_CASE("diameter ratio of nested boxes") {
  const DiamRatio same = diam_ratio_check(identity_map(), 0.9, 0.9, 2.0);
  CHECK(same.diam_inner == doctest::Approx(same.diam_outer));
  CHECK(same.arc_ratio == doctest::Approx(1.0));
  CHECK(same.constant == doctest::Approx(1.0));

  const DiamRatio id = diam_ratio_check(identity_map(), 0.9, 0.8, 2.0);
  CHECK(id.arc_ratio == doctest::Approx(0.5));
  CHECK(id.diam_inner / id.diam_outer == doctest::Approx(0.55).epsilon(0.05));
  CHECK(id.stable);
  CHECK(std::isfinite(id.constant));

  const DiamRatio q = diam_ratio_check(quad_map(), cplx(0.0, 0.9), cplx(0.0, 0.7), 2.0);
  CHECK(q.stable);
  CHECK_THROWS_AS(diam_ratio_check(identity_map(), 0.9, std::polar(0.8, 2.0), 2.0), ParameterError);
}

TEST_CASE("hoelder envelope") {
  const HolderFit id = holder_check(identity_map(), 0.9);
  CHECK(id.exponent == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(id.constant == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(id.pass);

  const MapDescriptor s = shear_qc(AnalyticPart::identity(), 3.0);
  const HolderFit sh = holder_check(s, cplx(0.0, 0.8));
  CHECK(sh.pass);
  CHECK(sh.constant <= 1.5 / 0.5 + 1e-2);

  const HolderFit q = holder_check(quad_map(), std::polar(0.85, 1.0));
  CHECK(q.pass);
  CHECK(q.exponent == doctest::Approx(1.0).epsilon(0.1));
  CHECK_THROWS_AS(holder_check(identity_map(), 0.3), ParameterError);
}
