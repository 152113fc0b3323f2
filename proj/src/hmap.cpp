#include <hqc/hmap.hpp>

#include <hqc/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hqc {

namespace detail {

struct PartNode {
  virtual ~PartNode() = default;
  virtual Jet jet(cplx z) const = 0;
  virtual bool beyond_safe_radius(cplx) const { return false; }
  virtual double truncation_estimate(cplx) const { return 0.0; }
};

namespace {

Jet catalog_base(CatalogName name, cplx z) {
  switch (name) {
    case CatalogName::identity:
      return {z, 1.0, 0.0};
    case CatalogName::koebe:
    case CatalogName::rotation_composite: {
      const cplx w = 1.0 - z;
      const cplx w2 = w * w;
      return {z / w2, (1.0 + z) / (w2 * w), (4.0 + 2.0 * z) / (w2 * w2)};
    }
    case CatalogName::halfplane: {
      const cplx w = 1.0 - z;
      return {z / w, 1.0 / (w * w), 2.0 / (w * w * w)};
    }
    case CatalogName::polynomial:
      break;
  }
  throw ParameterError("polynomial catalog entries need coefficients");
}

}  // namespace

struct CatalogNode final : PartNode {
  CatalogName name;
  cplx rotation;
  cplx scale;
  CatalogNode(CatalogName n, cplx r, cplx s) : name(n), rotation(r), scale(s) {}
  Jet jet(cplx z) const override {
    const Jet b = catalog_base(name, rotation * z);
    return {scale * std::conj(rotation) * b.value, scale * b.d1, scale * rotation * b.d2};
  }
};

struct SeriesNode final : PartNode {
  std::vector<cplx> coeffs;
  bool exact;  // finite polynomial rather than a truncated series
  SeriesNode(std::vector<cplx> c, bool e) : coeffs(std::move(c)), exact(e) {}
  Jet jet(cplx z) const override {
    // Horner recurrence carrying value, first and second derivative.
    cplx p = 0.0, dp = 0.0, ddp = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      ddp = ddp * z + 2.0 * dp;
      dp = dp * z + p;
      p = p * z + *it;
    }
    return {p, dp, ddp};
  }
  bool beyond_safe_radius(cplx z) const override { return !exact && std::abs(z) > kSafeRadius; }
  double truncation_estimate(cplx z) const override {
    if (exact) return 0.0;
    const auto n = static_cast<double>(coeffs.size() - 1);
    return std::abs(coeffs.back()) * std::pow(std::abs(z), n);
  }
};

struct SumNode final : PartNode {
  std::vector<std::pair<cplx, AnalyticPart>> terms;
  cplx constant;
  SumNode(std::vector<std::pair<cplx, AnalyticPart>> t, cplx c) : terms(std::move(t)), constant(c) {}
  Jet jet(cplx z) const override {
    Jet out{constant, 0.0, 0.0};
    for (const auto& [w, part] : terms) {
      const Jet j = part.jet(z);
      out.value += w * j.value;
      out.d1 += w * j.d1;
      out.d2 += w * j.d2;
    }
    return out;
  }
  bool beyond_safe_radius(cplx z) const override {
    for (const auto& [w, part] : terms)
      if (part.beyond_safe_radius(z)) return true;
    return false;
  }
  double truncation_estimate(cplx z) const override {
    double t = 0.0;
    for (const auto& [w, part] : terms) t += std::abs(w) * part.truncation_estimate(z);
    return t;
  }
};

struct AutomorphismNode final : PartNode {
  AnalyticPart inner;
  cplx rotation;
  cplx center;
  AutomorphismNode(AnalyticPart p, cplx r, cplx c) : inner(std::move(p)), rotation(r), center(c) {}
  cplx map(cplx z) const { return rotation * (z + center) / (1.0 + std::conj(center) * z); }
  Jet jet(cplx z) const override {
    const cplx den = 1.0 + std::conj(center) * z;
    const double s = 1.0 - std::norm(center);
    const cplx phi = rotation * (z + center) / den;
    const cplx dphi = rotation * s / (den * den);
    const cplx ddphi = -2.0 * std::conj(center) * rotation * s / (den * den * den);
    const Jet j = inner.jet(phi);
    return {j.value, j.d1 * dphi, j.d2 * dphi * dphi + j.d1 * ddphi};
  }
  bool beyond_safe_radius(cplx z) const override { return inner.beyond_safe_radius(map(z)); }
  double truncation_estimate(cplx z) const override { return inner.truncation_estimate(map(z)); }
};

}  // namespace detail

std::string to_string(CatalogName name) {
  switch (name) {
    case CatalogName::identity: return "identity";
    case CatalogName::koebe: return "koebe";
    case CatalogName::halfplane: return "halfplane";
    case CatalogName::rotation_composite: return "rotation-composite";
    case CatalogName::polynomial: return "polynomial";
  }
  return "?";
}

CatalogName catalog_from_string(const std::string& name) {
  if (name == "identity") return CatalogName::identity;
  if (name == "koebe") return CatalogName::koebe;
  if (name == "halfplane") return CatalogName::halfplane;
  if (name == "rotation-composite") return CatalogName::rotation_composite;
  if (name == "polynomial") return CatalogName::polynomial;
  throw ParameterError("unknown catalog entry '" + name + "'");
}

AnalyticPart AnalyticPart::identity() { return catalog(CatalogName::identity); }
AnalyticPart AnalyticPart::koebe(cplx rotation) { return catalog(CatalogName::koebe, rotation); }
AnalyticPart AnalyticPart::halfplane(cplx rotation) { return catalog(CatalogName::halfplane, rotation); }
AnalyticPart AnalyticPart::rotated_koebe(cplx rotation) {
  return catalog(CatalogName::rotation_composite, rotation);
}

AnalyticPart AnalyticPart::catalog(CatalogName name, cplx rotation, cplx scale) {
  if (name == CatalogName::polynomial) throw ParameterError("use AnalyticPart::polynomial for polynomials");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw ParameterError("catalog rotation must be unimodular");
  return AnalyticPart(std::make_shared<detail::CatalogNode>(name, rotation, scale));
}

AnalyticPart AnalyticPart::polynomial(std::vector<cplx> coeffs) {
  if (coeffs.empty()) throw ParameterError("polynomial needs at least one coefficient");
  return AnalyticPart(std::make_shared<detail::SeriesNode>(std::move(coeffs), true));
}

AnalyticPart AnalyticPart::series(std::vector<cplx> coeffs) {
  if (coeffs.empty()) throw ParameterError("power series needs at least one coefficient");
  return AnalyticPart(std::make_shared<detail::SeriesNode>(std::move(coeffs), false));
}

AnalyticPart AnalyticPart::zero() { return polynomial({0.0}); }

AnalyticPart AnalyticPart::linear_combination(std::vector<std::pair<cplx, AnalyticPart>> terms,
                                              cplx constant) {
  return AnalyticPart(std::make_shared<detail::SumNode>(std::move(terms), constant));
}

AnalyticPart AnalyticPart::compose_automorphism(AnalyticPart part, cplx rotation, cplx center) {
  if (!(std::abs(center) < 1.0)) throw DomainError("automorphism center must lie in the disk");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw ParameterError("automorphism rotation must be unimodular");
  return AnalyticPart(std::make_shared<detail::AutomorphismNode>(std::move(part), rotation, center));
}

Jet AnalyticPart::jet(cplx z) const { return node_->jet(z); }

AnalyticPart::Kind AnalyticPart::kind() const {
  if (dynamic_cast<const detail::CatalogNode*>(node_.get())) return Kind::catalog;
  if (auto s = dynamic_cast<const detail::SeriesNode*>(node_.get())) return s->exact ? Kind::catalog : Kind::series;
  return Kind::composite;
}

std::optional<CatalogName> AnalyticPart::catalog_name() const {
  if (auto c = dynamic_cast<const detail::CatalogNode*>(node_.get())) return c->name;
  if (auto s = dynamic_cast<const detail::SeriesNode*>(node_.get()); s && s->exact) return CatalogName::polynomial;
  return std::nullopt;
}

cplx AnalyticPart::rotation() const {
  if (auto c = dynamic_cast<const detail::CatalogNode*>(node_.get())) return c->rotation;
  return 1.0;
}

cplx AnalyticPart::scale() const {
  if (auto c = dynamic_cast<const detail::CatalogNode*>(node_.get())) return c->scale;
  return 1.0;
}

const std::vector<cplx>& AnalyticPart::coefficients() const {
  static const std::vector<cplx> empty;
  if (auto s = dynamic_cast<const detail::SeriesNode*>(node_.get())) return s->coeffs;
  return empty;
}

bool AnalyticPart::beyond_safe_radius(cplx z) const { return node_->beyond_safe_radius(z); }
double AnalyticPart::truncation_estimate(cplx z) const { return node_->truncation_estimate(z); }

double dnorm(const WirtingerPair& p) { return std::abs(p.fz) + std::abs(p.fzb); }
double dmin(const WirtingerPair& p) { return std::abs(std::abs(p.fz) - std::abs(p.fzb)); }
double jacobian(const WirtingerPair& p) { return std::norm(p.fz) - std::norm(p.fzb); }
double dilatation(const WirtingerPair& p) {
  const double a = std::abs(p.fz);
  if (a == 0.0) return kInfiniteDilatation;
  return std::abs(p.fzb) / a;
}

void require_in_disk(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << "point " << z << " is not inside the unit disk";
    throw DomainError(os.str());
  }
}

namespace {
constexpr double kNormTol = 1e-12;
}

MapDescriptor::MapDescriptor(AnalyticPart h, AnalyticPart g, std::string label, MapFlags flags)
    : h_(std::move(h)), g_(std::move(g)), label_(std::move(label)), flags_(flags) {
  if (flags_.sh0) flags_.sh = true;
  if (flags_.convex) flags_.starlike = true;
  if (flags_.sh) {
    const Jet hj = h_.jet(0.0);
    const Jet gj = g_.jet(0.0);
    if (std::abs(hj.value) > kNormTol || std::abs(gj.value) > kNormTol || std::abs(hj.d1 - 1.0) > kNormTol)
      throw ParameterError("map '" + label_ + "' flagged SH violates h(0)=g(0)=0, h'(0)=1");
    if (flags_.sh0 && std::abs(gj.d1) > kNormTol)
      throw ParameterError("map '" + label_ + "' flagged SH0 violates g'(0)=0");
  }
}

MapDescriptor MapDescriptor::with_origin(TransformRecord record) const {
  MapDescriptor copy = *this;
  copy.origin_ = std::move(record);
  return copy;
}

MapDescriptor MapDescriptor::relabeled(std::string label) const {
  MapDescriptor copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool MapDescriptor::is_analytic() const {
  const auto& c = g_.coefficients();
  return !c.empty() && std::all_of(c.begin(), c.end(), [](cplx a) { return a == 0.0; });
}

cplx MapDescriptor::eval(cplx z) const {
  require_in_disk(z);
  return h_.value(z) + std::conj(g_.value(z));
}

WirtingerPair MapDescriptor::wirtinger(cplx z) const {
  require_in_disk(z);
  return {h_.derivative(z), std::conj(g_.derivative(z))};
}

bool MapDescriptor::near_boundary_warning(cplx z) const {
  return h_.beyond_safe_radius(z) || g_.beyond_safe_radius(z);
}

GridDensity GridDensity::refined(int levels) const {
  GridDensity d = *this;
  for (int i = 0; i < levels; ++i) {
    d.radial *= 2;
    d.angular *= 2;
  }
  return d;
}

void Config::validate() const {
  if (!(alpha >= 2.0)) throw ParameterError("alpha must be >= 2");
  if (!(K >= 1.0)) throw ParameterError("K must be >= 1");
  if (!(eps > 0.0 && eps <= 0.5)) throw ParameterError("eps must lie in (0, 0.5]");
  if (grid.radial < 2 || grid.angular < 4) throw ParameterError("grid densities too small");
  if (!(quad_abs_tol > 0.0) || !(quad_rel_tol > 0.0)) throw ParameterError("quadrature tolerances must be positive");
  if (!(slack >= 0.0)) throw ParameterError("slack must be nonnegative");
}

double qc_constant(const MapDescriptor& map, const RegionSample& grid) {
  double sup = 1.0;
  for (const cplx z : grid.points) {
    const WirtingerPair p = map.wirtinger(z);
    if (!(jacobian(p) > 0.0)) throw WitnessError("map '" + map.label() + "' is not sense-preserving", z);
    sup = std::max(sup, dnorm(p) / dmin(p));
  }
  return sup;
}

MapDescriptor normalize(const MapDescriptor& map) {
  const Jet hj = map.h().jet(0.0);
  const Jet gj = map.g().jet(0.0);
  const cplx a = hj.d1;
  if (a == 0.0) throw ParameterError("normalize: h'(0) = 0");
  // f/a = h/a + conj(g/conj(a)); then b = G'(0).
  const cplx b = gj.d1 / std::conj(a);
  const double nb = std::norm(b);
  if (!(nb < 1.0)) throw ParameterError("normalize: |g'(0)| >= |h'(0)|, affine normalization degenerates");
  const double d = 1.0 - nb;
  // H = (h1 - conj(b) g1)/d,  G = (g1 - b h1)/d with h1 = (h - h(0))/a, g1 = (g - g(0))/conj(a).
  const cplx ha = 1.0 / a;
  const cplx ga = 1.0 / std::conj(a);
  AnalyticPart H = AnalyticPart::linear_combination(
      {{ha / d, map.h()}, {-std::conj(b) * ga / d, map.g()}},
      (-hj.value * ha + std::conj(b) * gj.value * ga) / d);
  AnalyticPart G = AnalyticPart::linear_combination(
      {{ga / d, map.g()}, {-b * ha / d, map.h()}},
      (-gj.value * ga + b * hj.value * ha) / d);
  MapFlags flags = map.flags();
  flags.sh = true;
  flags.sh0 = true;
  MapDescriptor out(std::move(H), std::move(G), map.label(), flags);
  return out.with_origin({"normalize", b, map.label()});
}

}  // namespace hqc
