#pragma once

// Harmonic maps f = h + conj(g) of the unit disk and their pointwise
// derivative functionals.

#include <hqc/errors.hpp>

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hqc {

/// Series parts beyond this radius are evaluated but flagged.
inline constexpr double kSafeRadius = 0.999;

/// Value and first two derivatives of an analytic function at a point.
struct Jet {
  cplx value;
  cplx d1;
  cplx d2;
};

enum class CatalogName { identity, koebe, halfplane, rotation_composite, polynomial };

std::string to_string(CatalogName name);
CatalogName catalog_from_string(const std::string& name);

namespace detail {
struct PartNode;
}

/// One analytic half of a harmonic map.
///
/// Catalog entries carry closed-form value, first and second derivative.
/// A catalog entry may be rotated and scaled: p(z) = scale * conj(rot) * base(rot * z),
/// which keeps p'(0) = scale * base'(0). `rotation_composite` is the rotated
/// Koebe function z / (1 - rot z)^2.
///
/// Power series are evaluated by Horner's rule. Composite parts (linear
/// combinations, pre-composition with a disk automorphism) are built lazily
/// by the transforms and differentiated by the exact chain rule.
class AnalyticPart {
 public:
  enum class Kind { catalog, series, composite };

  static AnalyticPart identity();
  static AnalyticPart koebe(cplx rotation = 1.0);
  static AnalyticPart halfplane(cplx rotation = 1.0);
  static AnalyticPart rotated_koebe(cplx rotation);
  static AnalyticPart catalog(CatalogName name, cplx rotation = 1.0, cplx scale = 1.0);
  /// Exact finite polynomial sum_k c_k z^k (catalog `polynomial`).
  static AnalyticPart polynomial(std::vector<cplx> coeffs);
  /// Truncated power series; beyond kSafeRadius evaluation is flagged.
  static AnalyticPart series(std::vector<cplx> coeffs);
  static AnalyticPart zero();

  /// constant + sum_k weight_k * part_k
  static AnalyticPart linear_combination(std::vector<std::pair<cplx, AnalyticPart>> terms,
                                         cplx constant = 0.0);
  /// part(rot * (z + center) / (1 + conj(center) z)); requires |center| < 1, |rot| = 1.
  static AnalyticPart compose_automorphism(AnalyticPart part, cplx rotation, cplx center);

  Jet jet(cplx z) const;
  cplx value(cplx z) const { return jet(z).value; }
  cplx derivative(cplx z) const { return jet(z).d1; }
  cplx second_derivative(cplx z) const { return jet(z).d2; }

  Kind kind() const;
  /// Catalog name, rotation and scale; empty for non-catalog parts.
  std::optional<CatalogName> catalog_name() const;
  cplx rotation() const;
  cplx scale() const;
  /// Coefficients of series and polynomial parts; empty otherwise.
  const std::vector<cplx>& coefficients() const;

  /// True when some series node is evaluated beyond kSafeRadius at z.
  bool beyond_safe_radius(cplx z) const;
  /// |c_N| |z|^N for the last coefficient of a series part, 0 for others.
  double truncation_estimate(cplx z) const;

 private:
  explicit AnalyticPart(std::shared_ptr<const detail::PartNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::PartNode> node_;
};

/// The pair (f_z, f_zbar) at a point.
struct WirtingerPair {
  cplx fz;
  cplx fzb;
};

inline constexpr double kInfiniteDilatation = std::numeric_limits<double>::infinity();

double dnorm(const WirtingerPair& p);       // |fz| + |fzb|
double dmin(const WirtingerPair& p);        // ||fz| - |fzb||
double jacobian(const WirtingerPair& p);    // |fz|^2 - |fzb|^2
double dilatation(const WirtingerPair& p);  // |fzb| / |fz|, infinite sentinel at fz = 0

struct MapFlags {
  bool sh = false;
  bool sh0 = false;
  bool starlike = false;
  bool convex = false;
  bool bounded = false;
};

/// Provenance of a transformed map; serialized into reports.
struct TransformRecord {
  std::string kind;  // koebe | affine | shear | normalize | rotate
  std::variant<double, cplx> param;
  std::string source;
};

/// f = h + conj(g). Normalization flags are checked on construction.
class MapDescriptor {
 public:
  MapDescriptor(AnalyticPart h, AnalyticPart g, std::string label, MapFlags flags = {});

  const AnalyticPart& h() const { return h_; }
  const AnalyticPart& g() const { return g_; }
  const std::string& label() const { return label_; }
  const MapFlags& flags() const { return flags_; }
  const std::optional<TransformRecord>& origin() const { return origin_; }

  MapDescriptor with_origin(TransformRecord record) const;
  MapDescriptor relabeled(std::string label) const;

  /// True when g is the zero polynomial (analytic subfamily).
  bool is_analytic() const;

  /// h(z) + conj(g(z)); throws DomainError for |z| >= 1.
  cplx eval(cplx z) const;
  /// (h'(z), conj(g'(z))).
  WirtingerPair wirtinger(cplx z) const;
  /// True when a series part is evaluated beyond the safe radius.
  bool near_boundary_warning(cplx z) const;

 private:
  AnalyticPart h_;
  AnalyticPart g_;
  std::string label_;
  MapFlags flags_;
  std::optional<TransformRecord> origin_;
};

/// Throws DomainError unless |z| < 1 and z is finite.
void require_in_disk(cplx z);

struct GridDensity {
  int radial = 24;
  int angular = 48;
  GridDensity refined(int levels = 1) const;
};

/// Run-wide numerical configuration.
struct Config {
  double alpha = 3.0;  // order of S_H; 2 is exact on the analytic subfamily
  double K = 1.0;
  GridDensity grid;
  double quad_abs_tol = 1e-12;
  double quad_rel_tol = 1e-12;
  double eps = 1e-3;      // boundary offset for ring sampling
  double slack = 1e-9;    // relative slack for inequality predicates
  std::uint64_t seed = 20240517;

  /// Throws ParameterError when an invariant is violated.
  void validate() const;
};

struct RegionSample;

/// sup over the grid of dnorm / dmin; throws WitnessError at a point with
/// non-positive Jacobian.
double qc_constant(const MapDescriptor& map, const RegionSample& grid);

/// Translate, rescale by h'(0) and apply the affine map
/// (f - conj(b) conj(f)) / (1 - |b|^2) so that the result lies in S_H^0.
/// Throws ParameterError when h'(0) = 0 or |g'(0)/conj(h'(0))| >= 1.
MapDescriptor normalize(const MapDescriptor& map);

}  // namespace hqc
