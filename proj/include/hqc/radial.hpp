#pragma once

// Radial length of the image of [0, r e^{i theta}], the growth gauge psi,
// the running maximum m_f, and growth-ratio harnesses built on them.

#include <hqc/hmap.hpp>
#include <hqc/quadrature.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace hqc {

/// |f_z(rho e^{it}) + e^{-2it} f_zbar(rho e^{it})|, the speed of rho -> f(rho e^{it}).
double radial_speed(const MapDescriptor& map, double theta, double rho);

/// Integral of radial_speed over [0, r]. Above r = 0.9 the interval is split
/// geometrically toward r. A failure to reach `tol` is flagged, not thrown.
QuadResult radial_length(const MapDescriptor& map, double theta, double r, double tol = 1e-12);

/// sqrt(log(1/(1 - r))); DomainError unless 0 <= r < 1.
double psi(double r);

/// max |f(rho e^{i theta})| over [0, r]: a grid of n + 1 radii, then Brent
/// refinement around the best grid point.
double m_f(const MapDescriptor& map, double r, double theta, int n = 256);

struct ProfileRow {
  double r = 0.0;
  double ell = 0.0;
  double abs_f = 0.0;
  double m_f = 0.0;
  double psi = 0.0;
  double ratio = 0.0;
  double quad_err = 0.0;
  bool converged = true;
};

struct RadialProfile {
  double theta = 0.0;
  std::vector<ProfileRow> rows;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  bool bounded = false;  // max ratio <= 10 * median ratio
  bool monotone = true;  // ell and m_f nondecreasing in r
};

/// ell / (m_f psi) on an increasing r-grid inside (0.5, 1).
RadialProfile growth_ratio(const MapDescriptor& map, double theta, const std::vector<double>& r_grid,
                           double tol = 1e-12);

/// Same harness with m_f replaced by a constant bound on |f| (bounded maps).
RadialProfile keogh_ratio(const MapDescriptor& map, double theta, const std::vector<double>& r_grid,
                          double sup_abs_f, double tol = 1e-12);

/// 0.5, ..., 0.999: n points equally spaced in log(1 - r).
std::vector<double> default_r_grid(int n = 24, double r_lo = 0.5, double r_hi = 0.999);

struct ClassicalBounds {
  double ratio = 0.0;  // ell / |f(r e^{i theta})|
  std::optional<double> starlike_bound;  // 1 + r
  std::optional<double> convex_bound;    // arcsin(r) / r
  bool checked = false;  // false when the map carries neither flag
  bool pass = false;
};

ClassicalBounds classical_bounds(const MapDescriptor& map, double theta, double r, double tol = 1e-12);

/// CSV: theta,r,ell,abs_f,m_f,psi,ratio,quad_err
void write_csv(std::ostream& os, const RadialProfile& profile);

}  // namespace hqc
