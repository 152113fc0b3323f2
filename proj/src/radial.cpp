#include <hqc/radial.hpp>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hqc {

double radial_speed(const MapDescriptor& map, double theta, double rho) {
  const WirtingerPair p = map.wirtinger(std::polar(rho, theta));
  return std::abs(p.fz + std::polar(1.0, -2.0 * theta) * p.fzb);
}

QuadResult radial_length(const MapDescriptor& map, double theta, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radial_length: r must lie in [0, 1)");
  if (!(tol > 0.0)) throw ParameterError("radial_length: tol must be positive");
  auto speed = [&](double rho) { return radial_speed(map, theta, rho); };
  if (r > 0.9) return integrate_clustered(speed, r, tol, tol);
  return integrate(speed, 0.0, r, tol, tol);
}

double psi(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("psi: r must lie in [0, 1)");
  return std::sqrt(-std::log1p(-r));
}

double m_f(const MapDescriptor& map, double r, double theta, int n) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("m_f: r must lie in [0, 1)");
  if (n < 2) throw ParameterError("m_f: n must be >= 2");
  auto mod = [&](double rho) { return std::abs(map.eval(std::polar(rho, theta))); };
  int best = 0;
  double best_val = mod(0.0);
  for (int k = 1; k <= n; ++k) {
    const double v = mod(r * k / n);
    if (v >= best_val) {
      best_val = v;
      best = k;
    }
  }
  if (best == n) return best_val;
  // Interior maximum: polish with Brent on the neighbouring cells.
  const double lo = r * std::max(best - 1, 0) / n;
  const double hi = r * std::min(best + 1, n) / n;
  const auto [x, negv] = boost::math::tools::brent_find_minima([&](double rho) { return -mod(rho); }, lo, hi, 52);
  (void)x;
  return std::max(best_val, -negv);
}

namespace {

void summarize(RadialProfile& p) {
  std::vector<double> ratios;
  for (const auto& row : p.rows) ratios.push_back(row.ratio);
  if (ratios.empty()) return;
  p.max_ratio = *std::max_element(ratios.begin(), ratios.end());
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  p.median_ratio = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  p.bounded = p.max_ratio <= 10.0 * p.median_ratio;
  for (std::size_t i = 1; i < p.rows.size(); ++i) {
    const double slack = 1e-12 * std::max(1.0, p.rows[i].ell);
    if (p.rows[i].ell < p.rows[i - 1].ell - slack || p.rows[i].m_f < p.rows[i - 1].m_f - slack) p.monotone = false;
  }
}

RadialProfile build_profile(const MapDescriptor& map, double theta, const std::vector<double>& r_grid, double tol,
                            std::optional<double> fixed_bound) {
  RadialProfile p;
  p.theta = theta;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (!(r > 0.0 && r < 1.0)) throw DomainError("growth_ratio: r-grid must lie in (0, 1)");
    if (i > 0 && !(r > r_grid[i - 1])) throw ParameterError("growth_ratio: r-grid must be increasing");
    ProfileRow row;
    row.r = r;
    const QuadResult q = radial_length(map, theta, r, tol);
    row.ell = q.value;
    row.quad_err = q.error;
    row.converged = q.converged;
    row.abs_f = std::abs(map.eval(std::polar(r, theta)));
    row.m_f = fixed_bound ? *fixed_bound : m_f(map, r, theta);
    row.psi = psi(r);
    row.ratio = row.ell / (row.m_f * row.psi);
    p.rows.push_back(row);
  }
  summarize(p);
  return p;
}

}  // namespace

RadialProfile growth_ratio(const MapDescriptor& map, double theta, const std::vector<double>& r_grid, double tol) {
  return build_profile(map, theta, r_grid, tol, std::nullopt);
}

RadialProfile keogh_ratio(const MapDescriptor& map, double theta, const std::vector<double>& r_grid,
                          double sup_abs_f, double tol) {
  if (!(sup_abs_f > 0.0)) throw ParameterError("keogh_ratio: the bound on |f| must be positive");
  return build_profile(map, theta, r_grid, tol, sup_abs_f);
}

std::vector<double> default_r_grid(int n, double r_lo, double r_hi) {
  if (n < 2) throw ParameterError("r-grid needs at least two points");
  std::vector<double> g(n);
  const double a = std::log(1.0 - r_lo), b = std::log(1.0 - r_hi);
  for (int k = 0; k < n; ++k) g[k] = 1.0 - std::exp(a + (b - a) * k / (n - 1));
  g.back() = r_hi;
  return g;
}

ClassicalBounds classical_bounds(const MapDescriptor& map, double theta, double r, double tol) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("classical_bounds: r must lie in (0, 1)");
  ClassicalBounds out;
  const double ell = radial_length(map, theta, r, tol).value;
  out.ratio = ell / std::abs(map.eval(std::polar(r, theta)));
  const double slack = 1e-9;
  out.pass = true;
  if (map.flags().convex) {
    out.convex_bound = std::asin(r) / r;
    out.pass = out.pass && out.ratio <= *out.convex_bound * (1.0 + slack);
  }
  if (map.flags().starlike) {
    out.starlike_bound = 1.0 + r;
    out.pass = out.pass && out.ratio <= *out.starlike_bound * (1.0 + slack);
  }
  out.checked = out.convex_bound || out.starlike_bound;
  if (!out.checked) out.pass = false;
  return out;
}

void write_csv(std::ostream& os, const RadialProfile& profile) {
  os << "theta,r,ell,abs_f,m_f,psi,ratio,quad_err\n";
  const auto old = os.precision(17);
  for (const auto& row : profile.rows)
    os << profile.theta << ',' << row.r << ',' << row.ell << ',' << row.abs_f << ',' << row.m_f << ',' << row.psi
       << ',' << row.ratio << ',' << row.quad_err << '\n';
  os.precision(old);
}

}  // namespace hqc
