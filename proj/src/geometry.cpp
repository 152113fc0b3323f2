#include <hqc/geometry.hpp>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_point.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace hqc {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt15 = std::sqrt(15.0);
}  // namespace

double pseudo_hyperbolic(cplx z1, cplx z2) {
  return std::abs((z1 - z2) / (1.0 - std::conj(z1) * z2));
}

double hyp_dist(cplx z1, cplx z2) {
  require_in_disk(z1);
  require_in_disk(z2);
  return std::atanh(pseudo_hyperbolic(z1, z2));
}

double hyp_exp2(cplx z1, cplx z2) {
  require_in_disk(z1);
  require_in_disk(z2);
  const double t = pseudo_hyperbolic(z1, z2);
  return (1.0 + t) / (1.0 - t);
}

cplx disk_automorphism(cplx a, cplx z) { return (z + a) / (1.0 + std::conj(a) * z); }

double angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return d > kPi ? 2.0 * kPi - d : d;
}

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::box_B: return "box-B";
    case RegionKind::arc_I: return "arc-I";
    case RegionKind::stolz: return "stolz";
    case RegionKind::radius: return "radius";
    case RegionKind::circle: return "circle";
    case RegionKind::boundary_ring: return "boundary-ring";
    case RegionKind::disk_grid: return "disk-grid";
    case RegionKind::window: return "window";
  }
  return "?";
}

bool in_box_B(cplx z, cplx w, double tol) {
  const double rz = std::abs(z);
  const double rw = std::abs(w);
  if (rw < rz - tol || rw >= 1.0) return false;
  if (rz == 0.0) return true;
  return angle_distance(std::arg(z), std::arg(w)) <= kPi * (1.0 - rz) + tol;
}

RegionSample box_B(cplx z, GridDensity density, double depth) {
  require_in_disk(z);
  if (!(depth > 0.0 && depth < 1.0)) throw ParameterError("box_B depth must lie in (0, 1)");
  RegionSample s;
  s.kind = RegionKind::box_B;
  s.anchor = z;
  s.r = std::abs(z);
  s.density = density;
  const int nr = std::max(density.radial, 2);
  const int na = std::max(density.angular, 2);
  const double gap = 1.0 - s.r;
  std::vector<double> radii(nr);
  for (int j = 0; j < nr; ++j) radii[j] = 1.0 - gap * std::pow(depth, double(j) / (nr - 1));
  radii.front() = s.r;

  if (s.r == 0.0) {
    s.note = "B(0) is the whole disk; annulus grid returned";
    for (double rho : radii) {
      if (rho == 0.0) {
        s.points.emplace_back(0.0, 0.0);
        continue;
      }
      for (int k = 0; k < na; ++k) s.points.push_back(std::polar(rho, -kPi + 2.0 * kPi * k / na));
    }
    return s;
  }
  const double centre = std::arg(z);
  const double half = kPi * gap;
  for (double rho : radii)
    for (int k = 0; k < na; ++k) s.points.push_back(std::polar(rho, centre - half + 2.0 * half * k / (na - 1)));
  return s;
}

bool in_arc_I(cplx a, cplx w, double tol) {
  if (std::abs(std::abs(w) - 1.0) > tol) return false;
  const double ra = std::abs(a);
  if (ra == 0.0) return true;
  return angle_distance(std::arg(a), std::arg(w)) <= kPi * (1.0 - ra) + tol;
}

RegionSample arc_I(cplx a, int n, double radius) {
  require_in_disk(a);
  if (n < 2) throw ParameterError("arc_I needs at least two samples");
  RegionSample s;
  s.kind = RegionKind::arc_I;
  s.anchor = a;
  s.r = radius;
  s.eps = 1.0 - radius;
  s.density = {1, n};
  const double ra = std::abs(a);
  if (ra == 0.0) {
    s.note = "I(0) is the whole circle";
    for (int k = 0; k < n; ++k) s.points.push_back(std::polar(radius, -kPi + 2.0 * kPi * k / n));
    return s;
  }
  const double half = kPi * (1.0 - ra);
  for (int k = 0; k < n; ++k) s.points.push_back(std::polar(radius, std::arg(a) - half + 2.0 * half * k / (n - 1)));
  return s;
}

namespace {

double cross(cplx a, cplx b, cplx c) {
  const cplx u = b - a, v = c - a;
  return u.real() * v.imag() - u.imag() * v.real();
}

}  // namespace

bool in_stolz_hull(double r, cplx z) {
  if (std::abs(z) < r / 4.0) return true;
  // Tangent points from r to the circle |z| = r/4 sit at angle acos(1/4).
  const double beta = std::acos(0.25);
  const cplx a = r;
  const cplx cp = std::polar(r / 4.0, beta);
  const cplx cm = std::polar(r / 4.0, -beta);
  const double d1 = cross(a, cp, z), d2 = cross(cp, cm, z), d3 = cross(cm, a, z);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

StolzCheck stolz_angle_check(double r, cplx z) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterError("Stolz parameter must lie in (0, 1)");
  StolzCheck c;
  c.in_hull = in_stolz_hull(r, z);
  const double rho = std::abs(z);
  c.in_annular_piece = c.in_hull && rho > r / 4.0;
  c.angle = std::abs(std::arg(z));
  c.bound = 4.0 * kPi * (r - rho) / (r * kSqrt15);
  c.bound_satisfied = c.angle <= c.bound;
  return c;
}

RegionSample stolz_sample(double r, int n, std::uint64_t seed) {
  if (!(r > 0.0 && r < 1.0)) throw ParameterError("Stolz parameter must lie in (0, 1)");
  RegionSample s;
  s.kind = RegionKind::stolz;
  s.anchor = r;
  s.r = r;
  s.density = {n, 1};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-r / 4.0, r), uy(-r / 4.0, r / 4.0);
  s.points.reserve(n);
  while (static_cast<int>(s.points.size()) < n) {
    const cplx z(ux(rng), uy(rng));
    if (std::abs(z) >= r / 4.0 && in_stolz_hull(r, z)) s.points.push_back(z);
  }
  s.note = "hull minus the disk of radius r/4";
  return s;
}

RegionSample radius_sample(double theta, double r_max, int n) {
  if (n < 2) throw ParameterError("radius sample needs at least two points");
  require_in_disk(r_max);
  RegionSample s;
  s.kind = RegionKind::radius;
  s.anchor = std::polar(r_max, theta);
  s.r = r_max;
  s.theta = theta;
  s.density = {n, 1};
  for (int k = 0; k < n; ++k) s.points.push_back(std::polar(r_max * k / (n - 1), theta));
  return s;
}

RegionSample circle_sample(double r, int n) {
  if (n < 1) throw ParameterError("circle sample needs points");
  RegionSample s;
  s.kind = RegionKind::circle;
  s.r = r;
  s.density = {1, n};
  for (int k = 0; k < n; ++k) s.points.push_back(std::polar(r, 2.0 * kPi * k / n));
  return s;
}

RegionSample boundary_ring(double eps, int n) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("ring offset must lie in (0, 1)");
  RegionSample s = circle_sample(1.0 - eps, n);
  s.kind = RegionKind::boundary_ring;
  s.eps = eps;
  return s;
}

RegionSample disk_grid(GridDensity density, double r_max) {
  require_in_disk(r_max);
  RegionSample s;
  s.kind = RegionKind::disk_grid;
  s.r = r_max;
  s.density = density;
  s.points.emplace_back(0.0, 0.0);
  const int nr = std::max(density.radial, 1);
  const int na = std::max(density.angular, 1);
  for (int j = 1; j <= nr; ++j) {
    const double rho = j == nr ? r_max : 1.0 - std::pow(1.0 - r_max, double(j) / nr);
    for (int k = 0; k < na; ++k) s.points.push_back(std::polar(rho, 2.0 * kPi * k / na));
  }
  return s;
}

bool contains(const RegionSample& region, cplx z, double tol) {
  switch (region.kind) {
    case RegionKind::box_B:
      return in_box_B(region.anchor, z, tol);
    case RegionKind::arc_I:
      return std::abs(std::abs(z) - region.r) <= tol &&
             (std::abs(region.anchor) == 0.0 ||
              angle_distance(std::arg(region.anchor), std::arg(z)) <= kPi * (1.0 - std::abs(region.anchor)) + tol);
    case RegionKind::stolz:
      return in_stolz_hull(region.r, z) && std::abs(z) >= region.r / 4.0 - tol;
    case RegionKind::radius:
      return std::abs(z) <= region.r + tol &&
             (std::abs(z) <= tol || angle_distance(std::arg(z), region.theta) <= tol);
    case RegionKind::circle:
    case RegionKind::boundary_ring:
      return std::abs(std::abs(z) - region.r) <= tol;
    case RegionKind::disk_grid:
      return std::abs(z) <= region.r + tol;
    case RegionKind::window:
      return std::abs(z) < 1.0;
  }
  return false;
}

double diameter(std::span<const cplx> pts) {
  namespace bg = boost::geometry;
  using Point = bg::model::d2::point_xy<double>;
  if (pts.size() < 2) return 0.0;
  bg::model::multi_point<Point> cloud;
  cloud.reserve(pts.size());
  for (const cplx& p : pts) cloud.emplace_back(p.real(), p.imag());
  bg::model::polygon<Point> hull;
  bg::convex_hull(cloud, hull);
  const auto& ring = hull.outer();
  std::vector<cplx> v;
  v.reserve(ring.size());
  for (const Point& p : ring) v.emplace_back(p.x(), p.y());
  if (v.size() < 2) v.assign(pts.begin(), pts.end());
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, std::abs(v[i] - v[j]));
  return best;
}

namespace {

double ring_min_distance(const MapDescriptor& map, cplx w, double eps, int n) {
  double best = std::numeric_limits<double>::infinity();
  const double rho = 1.0 - eps;
  for (int k = 0; k < n; ++k) best = std::min(best, std::abs(map.eval(std::polar(rho, 2.0 * kPi * k / n)) - w));
  return best;
}

}  // namespace

BoundaryDistance boundary_distance(const MapDescriptor& map, cplx w, double eps, int n) {
  if (n < 64) throw ParameterError("boundary_distance needs n >= 64");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("ring offset must lie in (0, 1)");
  BoundaryDistance out;
  out.distance = ring_min_distance(map, w, eps, n);
  out.refined = ring_min_distance(map, w, eps, 2 * n);
  out.converged = std::abs(out.distance - out.refined) <= 1e-3 * std::max(1.0, out.refined);
  return out;
}

void write_csv(std::ostream& os, const RegionSample& region) {
  os << "kind,anchor_re,anchor_im,point_re,point_im\n";
  const std::string kind = to_string(region.kind);
  const auto old = os.precision(17);
  for (const cplx& p : region.points)
    os << kind << ',' << region.anchor.real() << ',' << region.anchor.imag() << ',' << p.real() << ','
       << p.imag() << '\n';
  os.precision(old);
}

}  // namespace hqc
