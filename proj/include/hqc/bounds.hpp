#pragma once

// Distortion, growth and comparison inequalities for S_H-type maps, each run
// as a margin-reporting predicate over sampled points.

#include <hqc/geometry.hpp>
#include <hqc/hmap.hpp>

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hqc {

/// Outcome of one inequality predicate over a sample.
/// Margins are (rhs - lhs) / max(1, rhs); pass iff worst margin >= -slack.
struct CheckReport {
  std::string predicate;
  std::string map;
  double alpha = 0.0;
  double K = 1.0;
  GridDensity grid;
  std::size_t samples = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  cplx witness = 0.0;
  bool pass = true;
  double slack = 1e-9;
  bool advisory = false;  // harmonic maps: alpha is a guess, so failures are reported, not asserted
  std::string notes;
  std::map<std::string, double> values;

  /// Record lhs <= rhs at `at`.
  void record(double lhs, double rhs, cplx at);
  /// Set `pass` from the worst margin.
  void finish();
};

double margin(double lhs, double rhs);

/// One report from several runs of the same predicate on the same map: samples
/// add up, the worst margin and its witness win, values keep the first run's.
CheckReport merge_reports(const std::vector<CheckReport>& parts);

CheckReport make_report(std::string predicate, const MapDescriptor& map, const Config& cfg);

/// Two-sided bound on |h'| by powers of (1 -+ |z|).
CheckReport check_distortion(const MapDescriptor& map, const Config& cfg, const RegionSample& grid);

/// |f(z1) - f(z0)| / ((1 - |z0|^2)|f_z(z0)|) between the exp(-+2 alpha lambda) bounds.
/// values["upper_margin"] is the worst margin of the upper bound alone.
CheckReport check_two_sided_growth(const MapDescriptor& map, const Config& cfg,
                                   const std::vector<std::pair<cplx, cplx>>& pairs);

/// Default (z0, z1) pairs: a coarse z0 grid against a finer z1 grid.
std::vector<std::pair<cplx, cplx>> growth_pairs(double r0_max = 0.9, double r1_max = 0.99);

/// 2 alpha K sup_t t(1+t)^{alpha-1} / ((1+t)^alpha - (1-t)^alpha); always >= K.
double norm_growth_constant(double alpha, double K);

/// ||D_f(z)|| |z| <= C |f(z)| / (1 - |z|) with C = norm_growth_constant.
CheckReport check_norm_growth(const MapDescriptor& map, const Config& cfg, const RegionSample& grid);

struct RadialTriple {
  cplx xi;  // unimodular direction
  double rho;
  double r;  // rho <= r
};

/// Default triples: 16 directions and a (rho, r) lattice in [0, 0.99].
std::vector<RadialTriple> radial_triples(int directions = 16);

/// (1-rho^2)||D_f(rho xi)|| / ((1-r^2)||D_f(r xi)||) <= exp(2 alpha lambda(rho, r)).
CheckReport check_radial_decay(const MapDescriptor& map, const Config& cfg, const std::vector<RadialTriple>& triples);

/// d_Omega(f(z)) >= ||D_f(z)||(1 - |z|^2)/(16 K), d estimated from the ring 1 - eps.
CheckReport check_boundary_distance(const MapDescriptor& map, const Config& cfg, const RegionSample& grid,
                                    double eps = 1e-4, int n = 4096);

struct WindowParams {
  double a1 = 1.0;
  double a2 = 2.0;
  double a3 = 3.141592653589793;
};

/// 2 exp((1+alpha)(a3 + log((2 a2 - a1)/a1)/2)). Requires 0 < a1 <= a2, a3 >= 0.
double harnack_constant(double a1, double a2, double a3, double alpha);

/// Polar sample of {1 - a2 d <= |z| <= 1 - a1 d, |arg z - arg z0| <= a3 d}, d = 1 - |z0|.
RegionSample harnack_window(cplx z0, const WindowParams& a, GridDensity density);

/// ||D_f(z)|| / ||D_f(z0)|| within [1/M, M] on the window.
CheckReport check_harnack(const MapDescriptor& map, const Config& cfg, cplx z0, const WindowParams& a,
                          GridDensity density = {16, 16});

/// |f(z) - f(z0)| <= K/(alpha(1+K)) [(M/2)^{2 alpha/(1+alpha)} - 1] (1-|z0|^2)|f_z(z0)| on the window.
CheckReport check_local_oscillation(const MapDescriptor& map, const Config& cfg, cplx z0, const WindowParams& a,
                                    GridDensity density = {16, 16});

/// Empirical constant in |f(rho e^{it})|/rho <= C m_f(r, t), with the split at rho0 mirrored:
/// values C_inner (rho <= rho0), C_outer = 1/rho0 and the lower-growth chain on [rho0, r].
CheckReport check_radial_quotient(const MapDescriptor& map, const Config& cfg, double rho0, double r, double theta,
                                  int n = 400);

/// 2 pi e^{(1+alpha)pi} + (2 C e^{(1+alpha)pi} + C)/delta.
double arc_constant(double alpha, double decay_C, double decay_delta);

/// diam f(I(a)) (ring 1 - eps surrogate) <= 32 K arc_constant d_G(a) over the centres `anchors`.
CheckReport check_arc_diameter(const MapDescriptor& map, const Config& cfg, const std::vector<cplx>& anchors,
                               double decay_C, double decay_delta, double eps = 1e-4, int n = 512);

/// Stolz-domain angle bound over `n` sampled points for each r.
CheckReport check_stolz(const std::vector<double>& radii, int n, std::uint64_t seed);

}  // namespace hqc
