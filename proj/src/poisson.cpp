#include <hqc/poisson.hpp>

#include <hqc/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace hqc {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double ring_mean(const MapDescriptor& map, double eps, int n) {
  const double R = 1.0 - eps;
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += dnorm(map.wirtinger(std::polar(R, 2.0 * kPi * k / n)));
  return s / n;
}

}  // namespace

BoundaryProfile boundary_profile(const MapDescriptor& map, double eps, int n) {
  if (!(eps > 0.0 && eps <= 0.5)) throw ParameterError("boundary_profile: eps must lie in (0, 0.5]");
  if (n < 256 || !power_of_two(n)) throw ParameterError("boundary_profile: n must be a power of two >= 256");
  BoundaryProfile p;
  p.eps = eps;
  p.n = n;
  p.values.resize(n);
  const double R = 1.0 - eps;
  double mean = 0.0;
  for (int k = 0; k < n; ++k) {
    p.values[k] = dnorm(map.wirtinger(std::polar(R, 2.0 * kPi * k / n)));
    mean += p.values[k];
  }
  mean /= n;
  const double half = ring_mean(map, eps / 2.0, 2 * n);
  p.drift = std::abs(half - mean) / mean;
  p.converged = p.drift <= 1e-2;
  return p;
}

double poisson_functional(const MapDescriptor& map, cplx zeta, const BoundaryProfile& profile) {
  require_in_disk(zeta);
  if (std::abs(zeta) > 1.0 - 2.0 * profile.eps + 1e-15)
    throw PrecisionError("poisson_functional: zeta too close to the sampling ring");
  const double R = 1.0 - profile.eps;
  const double base = dnorm(map.wirtinger(zeta));
  const double num = R * R - std::norm(zeta);
  double s = 0.0;
  for (int k = 0; k < profile.n; ++k) {
    const cplx xi = std::polar(R, 2.0 * kPi * k / profile.n);
    s += profile.values[k] * num / std::norm(xi - zeta);
  }
  return s / (profile.n * base);
}

int ring_samples(double eps) {
  if (!(eps > 0.0)) throw ParameterError("ring_samples: eps must be positive");
  const double need = std::max(256.0, 64.0 / eps);
  int n = 256;
  while (n < need) n *= 2;
  return n;
}

PoissonTrace poisson_sup(const MapDescriptor& map, GridDensity density, const std::vector<double>& eps_levels) {
  PoissonTrace out;
  for (const double eps : eps_levels) {
    const BoundaryProfile prof = boundary_profile(map, eps, ring_samples(eps));
    PoissonLevel lvl;
    lvl.eps = eps;
    lvl.n = prof.n;
    lvl.profile_converged = prof.converged;
    for (const cplx z : disk_grid(density, 1.0 - 2.0 * eps).points) {
      const double v = poisson_functional(map, z, prof);
      if (v > lvl.sup) {
        lvl.sup = v;
        lvl.witness = z;
      }
    }
    out.levels.push_back(lvl);
  }
  if (out.levels.empty()) return out;
  out.sup = out.levels.back().sup;
  out.stable = true;
  out.growing = out.levels.size() >= 2;
  for (std::size_t i = 1; i < out.levels.size(); ++i) {
    const double ratio = out.levels[i].sup / out.levels[i - 1].sup;
    if (!(ratio < 1.5 && ratio > 1.0 / 1.5)) out.stable = false;
    if (!(ratio >= 1.5)) out.growing = false;
  }
  return out;
}

double hardy_mean(const std::function<double(cplx)>& F, double p, double r, int n) {
  if (!(p > 0.0)) throw ParameterError("hardy_mean: p must be positive");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("hardy_mean: r must lie in (0, 1)");
  const double m = periodic_mean([&](double t) { return std::pow(std::abs(F(std::polar(r, t))), p); }, n);
  return std::pow(m, 1.0 / p);
}

double hardy_mean(const MapDescriptor& map, double p, double r, int n) {
  return hardy_mean([&](cplx z) { return std::abs(map.eval(z)); }, p, r, n);
}

PommerenkeBracket pommerenke_bracket(const MapDescriptor& map, double r, double theta1, double theta2,
                                     int chord_samples) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("pommerenke_bracket: r must lie in (0, 1)");
  PommerenkeBracket out;
  const cplx z1 = std::polar(r, theta1), z2 = std::polar(r, theta2);
  const cplx w1 = map.eval(z1), w2 = map.eval(z2);
  out.chord = std::abs(w1 - w2);
  if (out.chord == 0.0) return out;
  // Smaller arc: walk from theta1 by the signed angle in (-pi, pi].
  double span = std::remainder(theta2 - theta1, 2.0 * kPi);
  auto speed = [&](double t) {
    const cplx z = std::polar(r, theta1 + span * t);
    const WirtingerPair p = map.wirtinger(z);
    const cplx dz = cplx(0.0, span) * z;
    return std::abs(p.fz * dz + p.fzb * std::conj(dz));
  };
  out.arc_length = integrate(speed, 0.0, 1.0, 1e-12, 1e-12).value;
  std::vector<cplx> img;
  for (int k = 0; k < chord_samples; ++k) {
    const double s = static_cast<double>(k) / (chord_samples - 1);
    img.push_back(map.eval(z1 + s * (z2 - z1)));
  }
  out.path_diam = std::max(diameter(img), out.chord);
  out.lower = out.arc_length / out.path_diam;
  out.upper = out.arc_length / out.chord;
  return out;
}

void write_poisson_csv(std::ostream& os, const MapDescriptor& map, const RegionSample& zetas,
                       const BoundaryProfile& profile) {
  os << "zeta_re,zeta_im,functional,eps,n\n";
  const auto old = os.precision(17);
  for (const cplx z : zetas.points)
    os << z.real() << ',' << z.imag() << ',' << poisson_functional(map, z, profile) << ',' << profile.eps << ','
       << profile.n << '\n';
  os.precision(old);
}

}  // namespace hqc
