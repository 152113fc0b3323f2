#pragma once

// Hyperbolic metric on the disk, sampled regions, and boundary-distance
// estimates for image domains.

#include <hqc/hmap.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hqc {

/// |(z1 - z2) / (1 - conj(z1) z2)|
double pseudo_hyperbolic(cplx z1, cplx z2);

/// arctanh of the pseudo-hyperbolic distance; DomainError off the open disk.
double hyp_dist(cplx z1, cplx z2);

/// exp(2 * hyp_dist(z1, z2)) = (1 + t) / (1 - t), computed without the arctanh round trip.
double hyp_exp2(cplx z1, cplx z2);

/// (z + a) / (1 + conj(a) z)
cplx disk_automorphism(cplx a, cplx z);

/// |arg a - arg b| reduced to [0, pi].
double angle_distance(double a, double b);

enum class RegionKind { box_B, arc_I, stolz, radius, circle, boundary_ring, disk_grid, window };

std::string to_string(RegionKind kind);

/// A deterministic discretization of one region of the disk.
struct RegionSample {
  RegionKind kind = RegionKind::disk_grid;
  cplx anchor = 0.0;
  double r = 0.0;      // radius / Stolz parameter / cap
  double theta = 0.0;  // direction for rays
  double eps = 0.0;    // boundary offset for rings
  GridDensity density;
  std::vector<cplx> points;
  std::string note;
};

/// B(z): |z| <= |w| < 1 and |arg z - arg w| <= pi (1 - |z|), closed in angle.
bool in_box_B(cplx z, cplx w, double tol = 1e-12);

/// Tensor grid of B(z). Radii are geometrically clustered from |z| toward the
/// boundary, down to 1 - depth * (1 - |z|); both angular corners are included.
/// For z = 0 the box is the whole disk and an annulus grid is returned with a note.
RegionSample box_B(cplx z, GridDensity density, double depth = 1e-3);

/// Points of I(a) = {|w| = 1, |arg w - arg a| <= pi (1 - |a|)}, placed on the
/// circle of the given radius (1 for the arc itself, 1 - eps for a surrogate).
RegionSample arc_I(cplx a, int n, double radius = 1.0);
bool in_arc_I(cplx a, cplx w, double tol = 1e-12);

/// Stolz-type domain: interior of the convex hull of the point r and the disk of radius r/4.
bool in_stolz_hull(double r, cplx z);

struct StolzCheck {
  bool in_hull = false;
  bool in_annular_piece = false;  // in the hull and |z| > r/4
  bool bound_satisfied = false;   // |eta| <= 4 pi (r - rho) / (r sqrt 15)
  double angle = 0.0;
  double bound = 0.0;
};

StolzCheck stolz_angle_check(double r, cplx z);

/// n pseudo-random points of the hull minus the inner disk (rejection sampling).
RegionSample stolz_sample(double r, int n, std::uint64_t seed);

RegionSample radius_sample(double theta, double r_max, int n);
RegionSample circle_sample(double r, int n);
RegionSample boundary_ring(double eps, int n);

/// Polar grid: the origin plus radial circles geometrically clustered toward r_max.
RegionSample disk_grid(GridDensity density, double r_max);

/// Membership predicate for the closed region a sample discretizes.
bool contains(const RegionSample& region, cplx z, double tol = 1e-9);

/// Largest pairwise distance of a point set (convex-hull prefilter).
double diameter(std::span<const cplx> pts);

struct BoundaryDistance {
  double distance = 0.0;  // min over n ring samples
  double refined = 0.0;   // the same with 2n samples
  bool converged = false;
};

/// Estimate d_Omega(w) for Omega = f(D) from the image of the circle of radius 1 - eps.
/// Over-estimates; converges for maps extending continuously to the closed disk.
BoundaryDistance boundary_distance(const MapDescriptor& map, cplx w, double eps, int n);

/// CSV with columns kind,anchor_re,anchor_im,point_re,point_im.
void write_csv(std::ostream& os, const RegionSample& region);

}  // namespace hqc
