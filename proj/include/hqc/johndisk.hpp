#pragma once

// Numerical proxies for the radial John property: the two-radius ratio test,
// the box oscillation sup, the radial decay exponent, and the diameter and
// Hoelder comparisons that follow from them.

#include <hqc/geometry.hpp>
#include <hqc/hmap.hpp>

#include <string>
#include <vector>

namespace hqc {

struct RatioSup {
  double x = 0.0;
  double sup = 0.0;
  cplx witness = 0.0;  // r zeta at the sup
};

/// sup over (zeta, r) of (1-rho^2)||D_f(rho zeta)|| / ((1-r^2)||D_f(r zeta)||), rho = (x+r)/(1+xr).
/// zeta runs over n_zeta equally spaced directions starting at angle 0.
RatioSup criterion_ii(const MapDescriptor& map, double x, int n_zeta, const std::vector<double>& r_grid);

/// r = 0 followed by default_r_grid(n, 0.05, 0.999).
std::vector<double> ratio_r_grid(int n = 48);

inline const std::vector<double> kRatioXs{0.3, 0.5, 0.7, 0.9};

struct OscillationTrace {
  double sup = 0.0;              // value at the finest level
  std::vector<double> trace;     // sup per refinement level
  cplx witness_z = 0.0;
  cplx witness_w = 0.0;
  bool stable = false;           // last relative drift <= kStableDrift
  bool diverging = false;        // every level grows by >= kDivergenceFactor
  double max_drift = 0.0;        // largest relative change between consecutive levels
};

inline constexpr double kStableDrift = 1e-2;
inline constexpr double kDivergenceFactor = 1.5;

struct OscillationOptions {
  GridDensity z_density{8, 16};    // z-grid on [0, 0.999], refined per level
  GridDensity box_density{8, 8};   // samples of B(z), refined per level
  int levels = 3;                  // at least 3
  double first_depth = 1e-3;       // B(z) reaches 1 - depth (1 - |z|); depth / 10 per level
};

/// One level: sup over the z-grid and w in B(z) of |f(z) - f(w)| / ((1-|z|^2)||D_f(z)||).
double criterion_iii_level(const MapDescriptor& map, GridDensity z_density, GridDensity box_density, double depth,
                           cplx* witness_z = nullptr, cplx* witness_w = nullptr);

OscillationTrace criterion_iii(const MapDescriptor& map, const OscillationOptions& opt = {});

struct DecayFit {
  double slope = 0.0;     // min over rays of the fitted d log||D_f|| / d log(1 - rho)
  double delta = 0.0;     // min(1, 1 + slope)
  double C = 1.0;         // smallest constant making the decay bound hold on the sample
  double residual = 0.0;  // worst RMS fit residual over rays
  std::vector<double> slopes;
  bool log_linear = true;  // residual below kDecayResidual
  bool in_range() const { return delta > 0.0 && delta <= 1.0; }
};

inline constexpr double kDecayResidual = 0.05;

/// Least squares log||D_f(rho zeta)|| ~ a + s log(1 - rho) + c (1 - rho) on each ray,
/// rho in [r_lo, r_hi] spaced evenly in log(1 - rho).
DecayFit decay_fit(const MapDescriptor& map, int n_rays = 32, double r_lo = 0.6, double r_hi = 0.99,
                   int n_samples = 64);

struct JohnEstimate {
  std::string map;
  std::vector<RatioSup> ratio;
  OscillationTrace oscillation;
  DecayFit decay;
  bool ratio_positive = false;        // some x with sup < 1
  bool oscillation_positive = false;  // stable trace
  bool decay_positive = false;        // delta in (0, 1]
  std::string verdict;                // john-positive | john-negative | inconclusive
};

struct JohnOptions {
  int n_zeta = 64;
  int n_r = 48;
  OscillationOptions oscillation;
  int n_rays = 32;
};

JohnEstimate estimate_john(const MapDescriptor& map, const JohnOptions& opt = {});

struct DiamRatio {
  double diam_inner = 0.0;
  double diam_outer = 0.0;
  double arc_ratio = 0.0;    // (1 - |a1|) / (1 - |a2|)
  double constant = 0.0;     // (diam ratio) / arc_ratio^alpha
  double constant_refined = 0.0;
  bool stable = false;       // relative change under refinement <= 5e-2
};

/// Image-diameter ratio of nested boxes B(a1) in B(a2). ParameterError unless nested.
DiamRatio diam_ratio_check(const MapDescriptor& map, cplx a1, cplx a2, double alpha, GridDensity density = {16, 32});

struct HolderFit {
  double exponent = 0.0;   // fitted delta_1
  double constant = 0.0;   // envelope constant: max of y / x^delta over pairs
  double fit_constant = 0.0;
  std::size_t pairs = 0;
  bool pass = false;       // exponent in (0, 1] and finite constant
};

/// Pairs from B(z): y = |f(z1) - f(z2)| / d_Omega(f(z)) against x = |z1 - z2| / (1 - |z|).
HolderFit holder_check(const MapDescriptor& map, cplx z, int n_pairs = 400, std::uint64_t seed = 1,
                       GridDensity density = {12, 12});

}  // namespace hqc
