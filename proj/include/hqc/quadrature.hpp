#pragma once

// Adaptive Gauss-Kronrod on intervals, with optional geometric presplitting
// toward an endpoint singularity, and the periodic trapezoid rule.

#include <functional>
#include <vector>

namespace hqc {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

/// G7-K15 adaptive quadrature on [a, b]; converged when the estimated error is
/// below max(abs_tol, rel_tol * |value|) within the depth budget.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol = 1e-12, unsigned max_depth = 18);

/// Integral over [0, b] split at 1 - (1 - b) 2^k, k = 0, 1, ... so that panels
/// shrink geometrically toward b; used for integrands blowing up near 1.
QuadResult integrate_clustered(const std::function<double(double)>& f, double b, double abs_tol,
                               double rel_tol = 1e-12);

/// Breakpoints 0 < ... < b of integrate_clustered.
std::vector<double> geometric_breaks(double b);

/// (1/n) sum f(2 pi k / n): the trapezoid rule for a 2pi-periodic mean.
double periodic_mean(const std::function<double(double)>& f, int n);

}  // namespace hqc
