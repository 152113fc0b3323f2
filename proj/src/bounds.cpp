#include <hqc/bounds.hpp>

#include <hqc/radial.hpp>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hqc {

namespace {
constexpr double kPi = std::numbers::pi;
}

double margin(double lhs, double rhs) { return (rhs - lhs) / std::max(1.0, rhs); }

void CheckReport::record(double lhs, double rhs, cplx at) {
  ++samples;
  const double m = margin(lhs, rhs);
  // NaN margins count as failures at their witness.
  if (m < worst_margin || std::isnan(m)) {
    worst_margin = std::isnan(m) ? -std::numeric_limits<double>::infinity() : m;
    witness = at;
  }
}

CheckReport merge_reports(const std::vector<CheckReport>& parts) {
  if (parts.empty()) throw ParameterError("merge_reports: nothing to merge");
  CheckReport out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const CheckReport& p = parts[i];
    out.samples += p.samples;
    if (p.worst_margin < out.worst_margin) {
      out.worst_margin = p.worst_margin;
      out.witness = p.witness;
    }
    for (const auto& [k, v] : p.values) out.values.emplace(k, v);
    if (out.notes.empty()) out.notes = p.notes;
  }
  out.finish();
  return out;
}

void CheckReport::finish() { pass = samples == 0 || worst_margin >= -slack; }

CheckReport make_report(std::string predicate, const MapDescriptor& map, const Config& cfg) {
  CheckReport rep;
  rep.predicate = std::move(predicate);
  rep.map = map.label();
  rep.alpha = cfg.alpha;
  rep.K = cfg.K;
  rep.grid = cfg.grid;
  rep.slack = cfg.slack;
  rep.advisory = !map.is_analytic();
  return rep;
}

CheckReport check_distortion(const MapDescriptor& map, const Config& cfg, const RegionSample& grid) {
  CheckReport rep = make_report("distortion", map, cfg);
  const double a = cfg.alpha;
  for (const cplx z : grid.points) {
    const double r = std::abs(z);
    const double d = std::abs(map.h().derivative(z));
    const double lower = std::pow(1.0 - r, a - 1.0) / std::pow(1.0 + r, a + 1.0);
    const double upper = std::pow(1.0 + r, a - 1.0) / std::pow(1.0 - r, a + 1.0);
    rep.record(lower, d, z);
    rep.record(d, upper, z);
  }
  rep.finish();
  return rep;
}

std::vector<std::pair<cplx, cplx>> growth_pairs(double r0_max, double r1_max) {
  const RegionSample z0s = disk_grid({4, 8}, r0_max);
  const RegionSample z1s = disk_grid({8, 16}, r1_max);
  std::vector<std::pair<cplx, cplx>> pairs;
  for (const cplx a : z0s.points)
    for (const cplx b : z1s.points) pairs.emplace_back(a, b);
  return pairs;
}

CheckReport check_two_sided_growth(const MapDescriptor& map, const Config& cfg,
                                   const std::vector<std::pair<cplx, cplx>>& pairs) {
  CheckReport rep = make_report("two-sided-growth", map, cfg);
  const double a = cfg.alpha, K = cfg.K;
  double upper_margin = std::numeric_limits<double>::infinity();
  for (const auto& [z0, z1] : pairs) {
    const cplx fz0 = map.wirtinger(z0).fz;
    if (fz0 == 0.0) throw WitnessError("two-sided growth: f_z vanishes", z0);
    const double q = std::abs(map.eval(z1) - map.eval(z0)) / ((1.0 - std::norm(z0)) * std::abs(fz0));
    const double e = std::pow(hyp_exp2(z0, z1), a);  // exp(2 alpha lambda)
    const double upper = K / (a * (1.0 + K)) * (e - 1.0);
    const double lower = (1.0 - 1.0 / e) / (a * (1.0 + K));
    rep.record(lower, q, z1);
    rep.record(q, upper, z1);
    if (z0 != z1) upper_margin = std::min(upper_margin, margin(q, upper));
  }
  rep.values["upper_margin"] = upper_margin;
  rep.finish();
  return rep;
}

double norm_growth_constant(double alpha, double K) {
  if (!(alpha >= 2.0) || !(K >= 1.0)) throw ParameterError("norm_growth_constant: need alpha >= 2, K >= 1");
  auto phi = [alpha](double t) {
    if (t <= 0.0) return 1.0 / (2.0 * alpha);  // limit at t = 0
    return t * std::pow(1.0 + t, alpha - 1.0) / (std::pow(1.0 + t, alpha) - std::pow(1.0 - t, alpha));
  };
  // The sup over |z| < 1 is a sup over t in [0, 1); phi extends continuously to t = 1.
  constexpr int n = 2000;
  int best = 0;
  double best_val = phi(0.0);
  for (int k = 1; k <= n; ++k) {
    const double v = phi(static_cast<double>(k) / n);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  if (best > 0 && best < n) {
    const auto [t, negv] = boost::math::tools::brent_find_minima([&](double t) { return -phi(t); },
                                                                static_cast<double>(best - 1) / n,
                                                                static_cast<double>(best + 1) / n, 52);
    (void)t;
    best_val = std::max(best_val, -negv);
  }
  return 2.0 * alpha * K * best_val;
}

CheckReport check_norm_growth(const MapDescriptor& map, const Config& cfg, const RegionSample& grid) {
  CheckReport rep = make_report("norm-growth", map, cfg);
  const double c = norm_growth_constant(cfg.alpha, cfg.K);
  rep.values["constant"] = c;
  for (const cplx z : grid.points) {
    const double r = std::abs(z);
    const double lhs = dnorm(map.wirtinger(z)) * r;
    const double rhs = c * std::abs(map.eval(z)) / (1.0 - r);
    rep.record(lhs, rhs, z);
  }
  rep.finish();
  return rep;
}

std::vector<RadialTriple> radial_triples(int directions) {
  std::vector<double> lattice;
  for (int k = 0; k <= 9; ++k) lattice.push_back(0.1 * k);
  lattice.insert(lattice.end(), {0.95, 0.99});
  std::vector<RadialTriple> out;
  for (int j = 0; j < directions; ++j) {
    const cplx xi = std::polar(1.0, 2.0 * kPi * j / directions);
    for (std::size_t a = 0; a < lattice.size(); ++a)
      for (std::size_t b = a; b < lattice.size(); ++b) out.push_back({xi, lattice[a], lattice[b]});
  }
  return out;
}

CheckReport check_radial_decay(const MapDescriptor& map, const Config& cfg, const std::vector<RadialTriple>& triples) {
  CheckReport rep = make_report("radial-decay", map, cfg);
  for (const auto& t : triples) {
    if (!(t.rho >= 0.0 && t.rho <= t.r && t.r < 1.0)) throw ParameterError("radial decay: need 0 <= rho <= r < 1");
    const double inner = (1.0 - t.rho * t.rho) * dnorm(map.wirtinger(t.rho * t.xi));
    const double outer = (1.0 - t.r * t.r) * dnorm(map.wirtinger(t.r * t.xi));
    const double rhs = std::pow((1.0 + t.r) * (1.0 - t.rho) / ((1.0 - t.r) * (1.0 + t.rho)), cfg.alpha);
    rep.record(inner / outer, rhs, t.r * t.xi);
  }
  rep.finish();
  return rep;
}

CheckReport check_boundary_distance(const MapDescriptor& map, const Config& cfg, const RegionSample& grid,
                                    double eps, int n) {
  CheckReport rep = make_report("boundary-distance", map, cfg);
  int unconverged = 0;
  for (const cplx z : grid.points) {
    const BoundaryDistance d = boundary_distance(map, map.eval(z), eps, n);
    if (!d.converged) ++unconverged;
    const double rhs = dnorm(map.wirtinger(z)) * (1.0 - std::norm(z)) / (16.0 * cfg.K);
    rep.record(rhs, d.refined, z);
  }
  rep.values["eps"] = eps;
  rep.values["unconverged"] = unconverged;
  if (unconverged) rep.notes = "ring-sampled distance not converged at some points";
  rep.finish();
  return rep;
}

double harnack_constant(double a1, double a2, double a3, double alpha) {
  if (!(a1 > 0.0) || !(a2 >= a1) || !(a3 >= 0.0)) throw ParameterError("harnack_constant: need 0 < a1 <= a2, a3 >= 0");
  return 2.0 * std::exp((1.0 + alpha) * (a3 + 0.5 * std::log((2.0 * a2 - a1) / a1)));
}

RegionSample harnack_window(cplx z0, const WindowParams& a, GridDensity density) {
  require_in_disk(z0);
  const double r0 = std::abs(z0);
  if (r0 == 0.0) throw ParameterError("harnack window: z0 must be nonzero");
  const double d = 1.0 - r0;
  const double r_lo = 1.0 - a.a2 * d;
  const double r_hi = 1.0 - a.a1 * d;
  if (r_lo < 0.0) throw ParameterError("harnack window: need 1 - a2 (1 - |z0|) >= 0");
  RegionSample s;
  s.kind = RegionKind::window;
  s.anchor = z0;
  s.r = r0;
  s.density = density;
  const int nr = std::max(density.radial, 2);
  const int na = std::max(density.angular, 2);
  const double half = std::min(a.a3 * d, kPi);
  for (int j = 0; j < nr; ++j) {
    const double rho = r_lo + (r_hi - r_lo) * j / (nr - 1);
    for (int k = 0; k < na; ++k) {
      const double t = std::arg(z0) - half + 2.0 * half * k / (na - 1);
      s.points.push_back(std::polar(rho, t));
    }
  }
  s.points.push_back(z0);
  return s;
}

CheckReport check_harnack(const MapDescriptor& map, const Config& cfg, cplx z0, const WindowParams& a,
                          GridDensity density) {
  CheckReport rep = make_report("harnack", map, cfg);
  const double M = harnack_constant(a.a1, a.a2, a.a3, cfg.alpha);
  rep.values["harnack_constant"] = M;
  const double base = dnorm(map.wirtinger(z0));
  for (const cplx z : harnack_window(z0, a, density).points) {
    const double ratio = dnorm(map.wirtinger(z)) / base;
    rep.record(ratio, M, z);
    rep.record(1.0 / M, ratio, z);
  }
  rep.finish();
  return rep;
}

CheckReport check_local_oscillation(const MapDescriptor& map, const Config& cfg, cplx z0, const WindowParams& a,
                                    GridDensity density) {
  CheckReport rep = make_report("local-oscillation", map, cfg);
  const double M = harnack_constant(a.a1, a.a2, a.a3, cfg.alpha);
  const double al = cfg.alpha, K = cfg.K;
  const double scale = K / (al * (1.0 + K)) * (std::pow(M / 2.0, 2.0 * al / (1.0 + al)) - 1.0);
  const double rhs = scale * (1.0 - std::norm(z0)) * std::abs(map.wirtinger(z0).fz);
  rep.values["harnack_constant"] = M;
  const cplx f0 = map.eval(z0);
  for (const cplx z : harnack_window(z0, a, density).points) rep.record(std::abs(map.eval(z) - f0), rhs, z);
  rep.finish();
  return rep;
}

CheckReport check_radial_quotient(const MapDescriptor& map, const Config& cfg, double rho0, double r, double theta,
                                  int n) {
  if (!(rho0 > 0.0 && rho0 <= r && r < 1.0)) throw ParameterError("radial quotient: need 0 < rho0 <= r < 1");
  CheckReport rep = make_report("radial-quotient", map, cfg);
  const double m = m_f(map, r, theta);
  const double al = cfg.alpha, K = cfg.K;
  auto T = [&](double t) { return K / (al * (1.0 + K)) * (1.0 - std::pow((1.0 - t) / (1.0 + t), al)); };
  double inner = 0.0, sup = 0.0;
  std::vector<std::pair<double, double>> samples;  // (rho, |f|/rho)
  for (int k = 1; k <= n; ++k) {
    // Radii cluster toward 0 as well, where the quotient has its limit.
    const double rho = r * std::pow(static_cast<double>(k) / n, 2.0);
    const double q = std::abs(map.eval(std::polar(rho, theta))) / rho;
    samples.emplace_back(rho, q);
    if (rho <= rho0) inner = std::max(inner, q / m);
    sup = std::max(sup, q / m);
  }
  const double quotient_c = std::max(inner, 1.0 / rho0);
  rep.values["C_inner"] = inner;
  rep.values["C_outer"] = 1.0 / rho0;
  rep.values["C_empirical"] = sup;
  rep.values["m_f"] = m;
  for (const auto& [rho, q] : samples) {
    const cplx at = std::polar(rho, theta);
    rep.record(q, quotient_c * m, at);
    if (rho >= rho0) {
      const double fr = q * rho;
      rep.record(T(rho0), T(rho), at);
      rep.record(T(rho), fr, at);
      rep.record(fr, m, at);
    }
  }
  rep.finish();
  return rep;
}

double arc_constant(double alpha, double decay_C, double decay_delta) {
  if (!(decay_C > 0.0) || !(decay_delta > 0.0 && decay_delta <= 1.0))
    throw ParameterError("arc_constant: need C > 0 and delta in (0, 1]");
  const double e = std::exp((1.0 + alpha) * kPi);
  return 2.0 * kPi * e + (2.0 * decay_C * e + decay_C) / decay_delta;
}

CheckReport check_arc_diameter(const MapDescriptor& map, const Config& cfg, const std::vector<cplx>& anchors,
                               double decay_C, double decay_delta, double eps, int n) {
  CheckReport rep = make_report("arc-diameter", map, cfg);
  const double arc_c = arc_constant(cfg.alpha, decay_C, decay_delta);
  rep.values["arc_constant"] = arc_c;
  for (const cplx a : anchors) {
    const RegionSample arc = arc_I(a, n, 1.0 - eps);
    std::vector<cplx> img;
    img.reserve(arc.points.size());
    for (const cplx p : arc.points) img.push_back(map.eval(p));
    const double diam = diameter(img);
    const double d = boundary_distance(map, map.eval(a), eps, 4096).refined;
    rep.record(diam, 32.0 * cfg.K * arc_c * d, a);
  }
  rep.finish();
  return rep;
}

CheckReport check_stolz(const std::vector<double>& radii, int n, std::uint64_t seed) {
  CheckReport rep;
  rep.predicate = "stolz-angle";
  rep.map = "-";
  const double strict = 3.0 * kPi / std::sqrt(15.0);
  int violations = 0, strict_violations = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const RegionSample s = stolz_sample(radii[i], n, seed + i);
    for (const cplx z : s.points) {
      const StolzCheck c = stolz_angle_check(radii[i], z);
      if (!c.bound_satisfied) ++violations;
      if (!(c.angle < strict)) ++strict_violations;
      rep.record(c.angle, c.bound, z);
    }
  }
  rep.values["violations"] = violations;
  rep.values["strict_violations"] = strict_violations;
  rep.slack = 0.0;
  rep.finish();
  rep.pass = rep.pass && violations == 0 && strict_violations == 0;
  return rep;
}

}  // namespace hqc
