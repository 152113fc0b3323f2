#include <hqc/quadrature.hpp>

#include <hqc/errors.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace hqc {

namespace {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err);
  // With depth 0 Boost reports |K15 - G7| for the rescaled panel on [-1, 1].
  return {a, b, v, err * 0.5 * (b - a)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, unsigned max_depth) {
  QuadResult out;
  if (a == b) return out;
  // Global adaptive bisection: always split the panel with the largest error.
  std::priority_queue<Panel> panels;
  panels.push(gk15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  const std::size_t budget = std::size_t{1} << std::min(max_depth, 20u);
  const double width_floor = (b - a) * std::ldexp(1.0, -static_cast<int>(max_depth) - 8);
  while (error > std::max(abs_tol, rel_tol * std::abs(value)) && panels.size() < budget) {
    const Panel worst = panels.top();
    if (worst.b - worst.a < width_floor) break;
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  out.value = 0.0;
  out.error = 0.0;
  while (!panels.empty()) {
    out.value += panels.top().value;
    out.error += panels.top().error;
    panels.pop();
  }
  out.converged = out.error <= std::max(abs_tol, rel_tol * std::abs(out.value));
  return out;
}

std::vector<double> geometric_breaks(double b) {
  std::vector<double> cuts{b};
  double gap = 1.0 - b;
  while (true) {
    gap *= 2.0;
    const double p = 1.0 - gap;
    if (p <= 0.5) break;
    cuts.push_back(p);
  }
  cuts.push_back(0.0);
  std::reverse(cuts.begin(), cuts.end());
  return cuts;
}

QuadResult integrate_clustered(const std::function<double(double)>& f, double b, double abs_tol, double rel_tol) {
  const std::vector<double> cuts = geometric_breaks(b);
  QuadResult out;
  const double piece_tol = abs_tol / static_cast<double>(cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const QuadResult q = integrate(f, cuts[i], cuts[i + 1], piece_tol, rel_tol);
    out.value += q.value;
    out.error += q.error;
    out.converged = out.converged && q.converged;
  }
  return out;
}

double periodic_mean(const std::function<double(double)>& f, int n) {
  if (n < 1) throw ParameterError("periodic_mean needs n >= 1");
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += f(2.0 * std::numbers::pi * k / n);
  return s / n;
}

}  // namespace hqc
