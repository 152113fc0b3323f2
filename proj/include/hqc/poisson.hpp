#pragma once

// Ring-sampled boundary derivative norms, the Poisson-weighted functional,
// Hardy means, and the arc/distance bracket for interior domains.

#include <hqc/geometry.hpp>
#include <hqc/hmap.hpp>

#include <functional>
#include <iosfwd>
#include <vector>

namespace hqc {

/// ||D_f|| at (1 - eps) e^{2 pi i k / n}, k = 0..n-1.
struct BoundaryProfile {
  double eps = 0.0;
  int n = 0;
  std::vector<double> values;
  double drift = 0.0;  // relative change of the ring mean between eps and eps/2
  bool converged = false;
};

/// n must be a power of two >= 256; eps in (0, 0.5].
BoundaryProfile boundary_profile(const MapDescriptor& map, double eps, int n);

/// (1/2pi) sum_k ||D_f(xi_k)|| / ||D_f(zeta)|| (R^2 - |zeta|^2) / |xi_k - zeta|^2 dt on the ring R = 1 - eps.
/// The kernel is the Poisson kernel of the ring itself, so constants integrate to 1.
/// PrecisionError when |zeta| > 1 - 2 eps.
double poisson_functional(const MapDescriptor& map, cplx zeta, const BoundaryProfile& profile);

struct PoissonLevel {
  double eps = 0.0;
  int n = 0;
  double sup = 0.0;
  cplx witness = 0.0;
  bool profile_converged = false;
};

struct PoissonTrace {
  std::vector<PoissonLevel> levels;
  double sup = 0.0;       // finest level
  bool stable = false;    // consecutive levels change by less than a factor 1.5
  bool growing = false;   // every level grows by a factor >= 1.5
};

/// Smallest power of two >= max(256, 64 / eps).
int ring_samples(double eps);

/// sup over disk_grid(density, 1 - 2 eps) for each eps.
PoissonTrace poisson_sup(const MapDescriptor& map, GridDensity density = {6, 12},
                         const std::vector<double>& eps_levels = {1e-2, 1e-3, 1e-4});

/// ((1/n) sum |F(r e^{it_k})|^p)^{1/p}
double hardy_mean(const std::function<double(cplx)>& F, double p, double r, int n = 1024);
/// Hardy mean of |f| itself.
double hardy_mean(const MapDescriptor& map, double p, double r, int n = 1024);

struct PommerenkeBracket {
  double arc_length = 0.0;  // image length of the smaller arc of |z| = r between the angles
  double chord = 0.0;       // |w1 - w2|
  double path_diam = 0.0;   // diameter of the image of the straight chord
  double lower = 0.0;       // arc_length / path_diam
  double upper = 0.0;       // arc_length / chord
};

PommerenkeBracket pommerenke_bracket(const MapDescriptor& map, double r, double theta1, double theta2,
                                     int chord_samples = 257);

/// CSV: zeta_re,zeta_im,functional,eps,n
void write_poisson_csv(std::ostream& os, const MapDescriptor& map, const RegionSample& zetas,
                       const BoundaryProfile& profile);

}  // namespace hqc
