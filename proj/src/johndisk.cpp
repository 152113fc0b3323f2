#include <hqc/johndisk.hpp>

#include <hqc/radial.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace hqc {

namespace {
constexpr double kPi = std::numbers::pi;
}

RatioSup criterion_ii(const MapDescriptor& map, double x, int n_zeta, const std::vector<double>& r_grid) {
  if (!(x > 0.0 && x < 1.0)) throw ParameterError("criterion_ii: x must lie in (0, 1)");
  if (n_zeta < 1) throw ParameterError("criterion_ii: need at least one direction");
  RatioSup out;
  out.x = x;
  for (int j = 0; j < n_zeta; ++j) {
    const cplx zeta = std::polar(1.0, 2.0 * kPi * j / n_zeta);
    for (const double r : r_grid) {
      if (!(r >= 0.0 && r < 1.0)) throw DomainError("criterion_ii: r must lie in [0, 1)");
      const double rho = (x + r) / (1.0 + x * r);
      const double outer = dnorm(map.wirtinger(rho * zeta));
      const double inner = dnorm(map.wirtinger(r * zeta));
      if (inner == 0.0) throw WitnessError("criterion_ii: derivative norm vanishes", r * zeta);
      const double v = (1.0 - rho * rho) * outer / ((1.0 - r * r) * inner);
      if (v > out.sup) {
        out.sup = v;
        out.witness = r * zeta;
      }
    }
  }
  return out;
}

std::vector<double> ratio_r_grid(int n) {
  std::vector<double> g{0.0};
  const std::vector<double> tail = default_r_grid(n, 0.05, 0.999);
  g.insert(g.end(), tail.begin(), tail.end());
  return g;
}

double criterion_iii_level(const MapDescriptor& map, GridDensity z_density, GridDensity box_density, double depth,
                           cplx* witness_z, cplx* witness_w) {
  const RegionSample zs = disk_grid(z_density, 0.999);
  double sup = 0.0;
  for (const cplx z : zs.points) {
    const double den = (1.0 - std::norm(z)) * dnorm(map.wirtinger(z));
    const cplx fz = map.eval(z);
    for (const cplx w : box_B(z, box_density, depth).points) {
      const double v = std::abs(fz - map.eval(w)) / den;
      if (v > sup) {
        sup = v;
        if (witness_z) *witness_z = z;
        if (witness_w) *witness_w = w;
      }
    }
  }
  return sup;
}

OscillationTrace criterion_iii(const MapDescriptor& map, const OscillationOptions& opt) {
  if (opt.levels < 3) throw ParameterError("criterion_iii: need at least 3 refinement levels");
  OscillationTrace out;
  double depth = opt.first_depth;
  for (int level = 0; level < opt.levels; ++level) {
    cplx wz, ww;
    const double s =
        criterion_iii_level(map, opt.z_density.refined(level), opt.box_density.refined(level), depth, &wz, &ww);
    out.trace.push_back(s);
    out.sup = s;
    out.witness_z = wz;
    out.witness_w = ww;
    depth /= 10.0;
  }
  out.diverging = true;
  for (std::size_t i = 1; i < out.trace.size(); ++i) {
    const double prev = out.trace[i - 1], cur = out.trace[i];
    out.max_drift = std::max(out.max_drift, std::abs(cur - prev) / prev);
    if (!(cur >= kDivergenceFactor * prev)) out.diverging = false;
  }
  const std::size_t n = out.trace.size();
  const double last_drift = std::abs(out.trace[n - 1] - out.trace[n - 2]) / out.trace[n - 2];
  out.stable = last_drift <= kStableDrift;
  return out;
}

DecayFit decay_fit(const MapDescriptor& map, int n_rays, double r_lo, double r_hi, int n_samples) {
  if (!(r_lo > 0.5 && r_lo < r_hi && r_hi < 0.999 + 1e-12)) throw ParameterError("decay_fit: window must lie in (0.5, 0.999]");
  if (n_rays < 1 || n_samples < 4) throw ParameterError("decay_fit: too few rays or samples");
  DecayFit out;
  out.slope = std::numeric_limits<double>::infinity();
  const std::vector<double> rhos = default_r_grid(n_samples, r_lo, r_hi);
  std::vector<double> intercepts;
  for (int j = 0; j < n_rays; ++j) {
    const cplx zeta = std::polar(1.0, 2.0 * kPi * j / n_rays);
    Eigen::MatrixXd A(n_samples, 3);
    Eigen::VectorXd y(n_samples);
    for (int k = 0; k < n_samples; ++k) {
      const double u = 1.0 - rhos[k];
      A(k, 0) = 1.0;
      A(k, 1) = std::log(u);
      A(k, 2) = u;
      y(k) = std::log(dnorm(map.wirtinger(rhos[k] * zeta)));
    }
    const Eigen::Vector3d c = A.colPivHouseholderQr().solve(y);
    const double rms = std::sqrt((A * c - y).squaredNorm() / n_samples);
    out.residual = std::max(out.residual, rms);
    out.slopes.push_back(c(1));
    out.slope = std::min(out.slope, c(1));
  }
  // A faster decay than (1 - rho)^0 still satisfies the bound with exponent 1.
  out.delta = std::min(1.0, 1.0 + out.slope);
  out.log_linear = out.residual <= kDecayResidual;

  // Smallest C with ||D(rho)|| <= C ||D(r)|| ((1-rho)/(1-r))^{delta-1} for sampled r <= rho.
  std::vector<double> path{0.0};
  const std::vector<double> tail = default_r_grid(2 * n_samples, 0.05, r_hi);
  path.insert(path.end(), tail.begin(), tail.end());
  double logC = 0.0;
  for (int j = 0; j < n_rays; ++j) {
    const cplx zeta = std::polar(1.0, 2.0 * kPi * j / n_rays);
    double running_min = std::numeric_limits<double>::infinity();
    for (const double rho : path) {
      const double v = std::log(dnorm(map.wirtinger(rho * zeta))) - (out.delta - 1.0) * std::log1p(-rho);
      running_min = std::min(running_min, v);
      logC = std::max(logC, v - running_min);
    }
  }
  out.C = std::exp(logC);
  return out;
}

JohnEstimate estimate_john(const MapDescriptor& map, const JohnOptions& opt) {
  JohnEstimate est;
  est.map = map.label();
  const std::vector<double> rg = ratio_r_grid(opt.n_r);
  for (const double x : kRatioXs) {
    est.ratio.push_back(criterion_ii(map, x, opt.n_zeta, rg));
    if (est.ratio.back().sup < 1.0) est.ratio_positive = true;
  }
  est.oscillation = criterion_iii(map, opt.oscillation);
  est.oscillation_positive = est.oscillation.stable;
  est.decay = decay_fit(map, opt.n_rays);
  est.decay_positive = est.decay.in_range();
  if (est.ratio_positive && est.oscillation.stable)
    est.verdict = "john-positive";
  else if (est.oscillation.diverging)
    est.verdict = "john-negative";
  else
    est.verdict = "inconclusive";
  return est;
}

namespace {

bool boxes_nested(cplx inner, cplx outer) {
  const double ri = std::abs(inner), ro = std::abs(outer);
  if (ro == 0.0) return true;
  if (ri < ro) return false;
  const double off = ri == 0.0 ? kPi : angle_distance(std::arg(inner), std::arg(outer));
  return off + kPi * (1.0 - ri) <= kPi * (1.0 - ro) + 1e-12;
}

double image_diameter(const MapDescriptor& map, cplx a, GridDensity density) {
  const RegionSample box = box_B(a, density);
  std::vector<cplx> img;
  img.reserve(box.points.size());
  for (const cplx p : box.points) img.push_back(map.eval(p));
  return diameter(img);
}

}  // namespace

DiamRatio diam_ratio_check(const MapDescriptor& map, cplx a1, cplx a2, double alpha, GridDensity density) {
  require_in_disk(a1);
  require_in_disk(a2);
  if (!boxes_nested(a1, a2)) throw ParameterError("diam_ratio_check: B(a1) is not contained in B(a2)");
  DiamRatio out;
  out.arc_ratio = (1.0 - std::abs(a1)) / (1.0 - std::abs(a2));
  auto constant_at = [&](GridDensity d, double* inner, double* outer) {
    const double d1 = image_diameter(map, a1, d);
    const double d2 = image_diameter(map, a2, d);
    if (inner) *inner = d1;
    if (outer) *outer = d2;
    return (d1 / d2) / std::pow(out.arc_ratio, alpha);
  };
  out.constant = constant_at(density, &out.diam_inner, &out.diam_outer);
  out.constant_refined = constant_at(density.refined(), nullptr, nullptr);
  out.stable = std::abs(out.constant_refined - out.constant) <= 5e-2 * out.constant;
  return out;
}

HolderFit holder_check(const MapDescriptor& map, cplx z, int n_pairs, std::uint64_t seed, GridDensity density) {
  require_in_disk(z);
  const double rz = std::abs(z);
  if (rz < 0.5) throw ParameterError("holder_check: need |z| >= 1/2");
  const double d = boundary_distance(map, map.eval(z), 1e-4, 4096).refined;
  if (!(d > 0.0)) throw PrecisionError("holder_check: boundary distance estimate vanished");
  const RegionSample box = box_B(z, density);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, box.points.size() - 1);
  std::vector<double> xs, ys;
  while (static_cast<int>(xs.size()) < n_pairs) {
    const cplx z1 = box.points[pick(rng)], z2 = box.points[pick(rng)];
    if (z1 == z2) continue;
    const double y = std::abs(map.eval(z1) - map.eval(z2)) / d;
    if (y == 0.0) continue;
    xs.push_back(std::abs(z1 - z2) / (1.0 - rz));
    ys.push_back(y);
  }
  HolderFit out;
  out.pairs = xs.size();
  Eigen::MatrixXd A(xs.size(), 2);
  Eigen::VectorXd b(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = std::log(xs[i]);
    b(i) = std::log(ys[i]);
  }
  const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  out.exponent = c(1);
  out.fit_constant = std::exp(c(0));
  // An exponent above 1 on a bounded x-range implies the bound with exponent 1.
  const double used = std::min(1.0, out.exponent);
  for (std::size_t i = 0; i < xs.size(); ++i) out.constant = std::max(out.constant, ys[i] / std::pow(xs[i], used));
  out.pass = out.exponent > 0.0 && std::isfinite(out.constant);
  return out;
}

}  // namespace hqc
