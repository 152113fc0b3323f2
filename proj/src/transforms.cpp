#include <hqc/transforms.hpp>

#include <cmath>
#include <map>

namespace hqc {

MapDescriptor koebe_transform(const MapDescriptor& map, cplx zeta) {
  require_in_disk(zeta);
  const Jet hj = map.h().jet(zeta);
  const Jet gj = map.g().jet(zeta);
  if (hj.d1 == 0.0) throw ParameterError("koebe_transform: h'(zeta) = 0");
  const cplx c = hj.d1 * (1.0 - std::norm(zeta));
  AnalyticPart hc = AnalyticPart::compose_automorphism(map.h(), 1.0, zeta);
  AnalyticPart gc = AnalyticPart::compose_automorphism(map.g(), 1.0, zeta);
  AnalyticPart H = AnalyticPart::linear_combination({{1.0 / c, hc}}, -hj.value / c);
  AnalyticPart G = AnalyticPart::linear_combination({{1.0 / std::conj(c), gc}}, -gj.value / std::conj(c));

  MapFlags flags;
  flags.sh = map.flags().sh;
  flags.sh0 = map.flags().sh0 && zeta == 0.0;
  flags.bounded = map.flags().bounded;
  MapDescriptor out(std::move(H), std::move(G), map.label(), flags);
  return out.with_origin({"koebe", zeta, map.label()});
}

MapDescriptor affine(const MapDescriptor& map, cplx mu, const RegionSample& grid) {
  if (!(std::abs(mu) < 1.0)) throw ParameterError("affine: |mu| must be < 1");
  AnalyticPart H = AnalyticPart::linear_combination({{1.0, map.h()}, {mu, map.g()}});
  AnalyticPart G = AnalyticPart::linear_combination({{1.0, map.g()}, {std::conj(mu), map.h()}});
  MapFlags flags;
  flags.bounded = map.flags().bounded;
  MapDescriptor out(std::move(H), std::move(G), map.label(), flags);
  for (const cplx z : grid.points)
    if (!(jacobian(out.wirtinger(z)) > 0.0)) throw WitnessError("affine: result is not sense-preserving", z);
  return out.with_origin({"affine", mu, map.label()});
}

namespace {

// mu * part, kept in closed or series form when the part has one.
AnalyticPart scaled(const AnalyticPart& part, double mu) {
  if (part.kind() == AnalyticPart::Kind::composite) return AnalyticPart::linear_combination({{mu, part}});
  std::vector<cplx> c = part.coefficients();
  for (cplx& a : c) a *= mu;
  if (part.kind() == AnalyticPart::Kind::series) return AnalyticPart::series(std::move(c));
  const CatalogName name = *part.catalog_name();
  if (name == CatalogName::polynomial) return AnalyticPart::polynomial(std::move(c));
  return AnalyticPart::catalog(name, part.rotation(), part.scale() * mu);
}

}  // namespace

MapDescriptor shear_qc(const AnalyticPart& h, double K, std::string label) {
  if (!(K >= 1.0)) throw ParameterError("shear_qc: K must be >= 1");
  const double mu = (K - 1.0) / (K + 1.0);
  AnalyticPart g = mu == 0.0 ? AnalyticPart::zero() : scaled(h, mu);
  const Jet hj = h.jet(0.0);
  MapFlags flags;
  flags.sh = std::abs(hj.value) < 1e-12 && std::abs(hj.d1 - 1.0) < 1e-12;
  flags.sh0 = flags.sh && mu == 0.0;
  MapDescriptor out(h, std::move(g), label, flags);
  return out.with_origin({"shear", K, label});
}

MapDescriptor rotate(const MapDescriptor& map, cplx pre, cplx post) {
  if (std::abs(std::abs(post) - 1.0) > 1e-12) throw ParameterError("rotate: post factor must be unimodular");
  AnalyticPart H = AnalyticPart::linear_combination({{post, AnalyticPart::compose_automorphism(map.h(), pre, 0.0)}});
  AnalyticPart G =
      AnalyticPart::linear_combination({{std::conj(post), AnalyticPart::compose_automorphism(map.g(), pre, 0.0)}});
  MapFlags flags = map.flags();
  flags.sh = flags.sh0 = false;
  MapDescriptor out(std::move(H), std::move(G), map.label(), flags);
  return out.with_origin({"rotate", pre * post, map.label()});
}

cplx pre_schwarzian_term(const AnalyticPart& h, cplx z) {
  const Jet j = h.jet(z);
  if (j.d1 == 0.0) throw WitnessError("pre-Schwarzian: h' vanishes", z);
  return (1.0 - std::norm(z)) * j.d2 / j.d1 - 2.0 * std::conj(z);
}

Sh2Margin sh2_margin(const MapDescriptor& map, const RegionSample& grid) {
  Sh2Margin out;
  // Per-circle sup, keyed by radius, for the boundary extrapolation.
  std::map<double, double> circle_sup;
  for (const cplx z : grid.points) {
    const double v = std::abs(pre_schwarzian_term(map.h(), z));
    if (v > out.grid_sup) {
      out.grid_sup = v;
      out.witness = z;
    }
    const double r = std::round(std::abs(z) * 1e12) / 1e12;
    auto [it, fresh] = circle_sup.emplace(r, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  out.boundary_limit = out.grid_sup;
  if (circle_sup.size() >= 2) {
    auto outer = circle_sup.rbegin();
    const auto [r2, s2] = *outer;
    const auto [r1, s1] = *std::next(outer);
    // Linear in (1 - r): exact for 2|z|, and a no-op when the circle sups agree.
    const double limit = s2 + (s2 - s1) * (1.0 - r2) / (r2 - r1);
    out.boundary_limit = std::max(out.grid_sup, limit);
  }
  out.member = out.boundary_limit < 4.0 - kSh2Guard;
  return out;
}

}  // namespace hqc
