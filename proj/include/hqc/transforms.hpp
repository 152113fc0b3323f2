#pragma once

// Constructions on harmonic maps: Koebe transform, affine family, shear,
// rotations, and the pre-Schwarzian sup used for the S_H2 gate.

#include <hqc/geometry.hpp>
#include <hqc/hmap.hpp>

#include <vector>

namespace hqc {

/// F(z) = (f(phi(z)) - f(zeta)) / (h'(zeta)(1 - |zeta|^2)) with phi(z) = (z + zeta)/(1 + conj(zeta) z).
/// Throws ParameterError when h'(zeta) = 0.
MapDescriptor koebe_transform(const MapDescriptor& map, cplx zeta);

/// f + mu conj(f) = (h + mu g) + conj(g + conj(mu) h). Sense preservation is
/// re-checked on `grid`; a WitnessError names the first bad point.
MapDescriptor affine(const MapDescriptor& map, cplx mu, const RegionSample& grid);

/// h + mu conj(h) with mu = (K - 1)/(K + 1).
MapDescriptor shear_qc(const AnalyticPart& h, double K, std::string label = "shear");

/// post * f(pre * z); both factors unimodular.
MapDescriptor rotate(const MapDescriptor& map, cplx pre, cplx post);

struct Sh2Margin {
  double grid_sup = 0.0;        // sup of |(1-|z|^2) h''/h' - 2 conj z| over the grid
  double boundary_limit = 0.0;  // sup extrapolated to |z| = 1 from the outer two circles
  cplx witness = 0.0;
  bool member = false;          // boundary_limit < 4 - guard
};

inline constexpr double kSh2Guard = 1e-3;

/// Pre-Schwarzian sup on a polar grid (disk_grid output). Throws WitnessError where h' = 0.
Sh2Margin sh2_margin(const MapDescriptor& map, const RegionSample& grid);

/// (1 - |z|^2) h''(z)/h'(z) - 2 conj(z)
cplx pre_schwarzian_term(const AnalyticPart& h, cplx z);

}  // namespace hqc
