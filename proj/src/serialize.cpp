#include <hqc/serialize.hpp>

#include <cmath>
#include <fstream>

namespace hqc {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw ParameterError("expected a number or [re, im], got " + j.dump());
}

namespace {

json number_or_pair(cplx z) {
  if (z.imag() == 0.0) return z.real();
  return to_json(z);
}

json coeff_array(const std::vector<cplx>& c) {
  json a = json::array();
  for (const cplx z : c) a.push_back(to_json(z));
  return a;
}

std::vector<cplx> coeffs_from_json(const json& j) {
  std::vector<cplx> c;
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return c;
}

}  // namespace

json to_json(const AnalyticPart& part) {
  json j;
  switch (part.kind()) {
    case AnalyticPart::Kind::series:
      j["kind"] = "series";
      j["coeffs"] = coeff_array(part.coefficients());
      return j;
    case AnalyticPart::Kind::catalog: {
      const CatalogName name = *part.catalog_name();
      j["kind"] = "catalog";
      j["name"] = to_string(name);
      if (name == CatalogName::polynomial) {
        j["coeffs"] = coeff_array(part.coefficients());
        return j;
      }
      if (part.rotation() != 1.0) j["rotation"] = number_or_pair(part.rotation());
      if (part.scale() != 1.0) j["scale"] = number_or_pair(part.scale());
      return j;
    }
    case AnalyticPart::Kind::composite:
      break;
  }
  throw ParameterError("composite analytic parts have no JSON form");
}

AnalyticPart part_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "series") return AnalyticPart::series(coeffs_from_json(j.at("coeffs")));
  if (kind != "catalog") throw ParameterError("unknown part kind '" + kind + "'");
  const CatalogName name = catalog_from_string(j.at("name").get<std::string>());
  if (name == CatalogName::polynomial) return AnalyticPart::polynomial(coeffs_from_json(j.at("coeffs")));
  const cplx rot = j.contains("rotation") ? complex_from_json(j["rotation"]) : cplx(1.0);
  const cplx scale = j.contains("scale") ? complex_from_json(j["scale"]) : cplx(1.0);
  return AnalyticPart::catalog(name, rot, scale);
}

json to_json(const MapDescriptor& map) {
  json j;
  j["label"] = map.label();
  j["h"] = to_json(map.h());
  j["g"] = to_json(map.g());
  json flags = json::array();
  const MapFlags& f = map.flags();
  if (f.sh) flags.push_back("SH");
  if (f.sh0) flags.push_back("SH0");
  if (f.starlike) flags.push_back("starlike");
  if (f.convex) flags.push_back("convex");
  if (f.bounded) flags.push_back("bounded");
  j["flags"] = flags;
  if (map.origin()) j["transform"] = to_json(*map.origin());
  return j;
}

MapDescriptor map_from_json(const json& j) {
  MapFlags flags;
  if (j.contains("flags")) {
    for (const auto& f : j["flags"]) {
      const std::string s = f.get<std::string>();
      if (s == "SH") flags.sh = true;
      else if (s == "SH0") flags.sh0 = true;
      else if (s == "starlike") flags.starlike = true;
      else if (s == "convex") flags.convex = true;
      else if (s == "bounded") flags.bounded = true;
      else throw ParameterError("unknown map flag '" + s + "'");
    }
  }
  return MapDescriptor(part_from_json(j.at("h")), part_from_json(j.at("g")), j.at("label").get<std::string>(),
                       flags);
}

json to_json(const TransformRecord& rec) {
  json j;
  j["transform"] = rec.kind;
  j["source"] = rec.source;
  std::visit([&](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>)
      j["param"] = v;
    else
      j["param"] = to_json(v);
  }, rec.param);
  return j;
}

const CorpusEntry* Corpus::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.map.label() == label) return &e;
  return nullptr;
}

Corpus corpus_from_json(const json& j) {
  Corpus c;
  for (const auto& m : j.at("maps")) {
    CorpusEntry e{map_from_json(m), m.value("K", 1.0)};
    if (!(e.K >= 1.0)) throw ParameterError("corpus map '" + e.map.label() + "' has K < 1");
    if (c.find(e.map.label())) throw ParameterError("duplicate corpus label '" + e.map.label() + "'");
    c.entries.push_back(std::move(e));
  }
  if (j.contains("suites")) {
    for (const auto& [name, s] : j["suites"].items()) {
      SuiteDef suite_def;
      if (s.contains("maps")) suite_def.maps = s["maps"].get<std::vector<std::string>>();
      if (s.contains("predicates")) suite_def.predicates = s["predicates"].get<std::vector<std::string>>();
      c.suites[name] = suite_def;
    }
  }
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open corpus '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParameterError("corpus '" + path + "': " + e.what());
  }
  return corpus_from_json(j);
}

void apply_config_json(Config& cfg, const json& j) {
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("K")) cfg.K = j["K"].get<double>();
  if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
  if (j.contains("tol")) cfg.quad_abs_tol = cfg.quad_rel_tol = j["tol"].get<double>();
  if (j.contains("slack")) cfg.slack = j["slack"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("grid")) {
    cfg.grid.radial = j["grid"].value("radial", cfg.grid.radial);
    cfg.grid.angular = j["grid"].value("angular", cfg.grid.angular);
  }
  if (j.contains("grid_level")) cfg.grid = cfg.grid.refined(j["grid_level"].get<int>());
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const CheckReport& rep) {
  json j;
  j["predicate"] = rep.predicate;
  j["map"] = rep.map;
  j["alpha"] = rep.alpha;
  j["K"] = rep.K;
  j["grid"] = {{"radial", rep.grid.radial}, {"angular", rep.grid.angular}};
  j["samples"] = rep.samples;
  j["worst_margin"] = finite_or_null(rep.worst_margin);
  j["witness"] = to_json(rep.witness);
  j["pass"] = rep.pass;
  j["slack"] = rep.slack;
  j["advisory"] = rep.advisory;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  if (!rep.values.empty()) {
    json v = json::object();
    for (const auto& [k, x] : rep.values) v[k] = finite_or_null(x);
    j["values"] = v;
  }
  return j;
}

json to_json(const JohnEstimate& est) {
  json j;
  j["map"] = est.map;
  json ii = json::array();
  for (const auto& r : est.ratio) ii.push_back({{"x", r.x}, {"sup", r.sup}, {"witness", to_json(r.witness)}});
  j["criterion_ii"] = ii;
  j["criterion_iii"] = {{"sup", est.oscillation.sup},
                        {"trace", est.oscillation.trace},
                        {"stable", est.oscillation.stable},
                        {"diverging", est.oscillation.diverging},
                        {"witness_z", to_json(est.oscillation.witness_z)},
                        {"witness_w", to_json(est.oscillation.witness_w)}};
  j["decay"] = {{"C", finite_or_null(est.decay.C)},
                {"delta", est.decay.delta},
                {"slope", est.decay.slope},
                {"residual", est.decay.residual},
                {"log_linear", est.decay.log_linear}};
  j["agreement"] = {{"criterion_ii", est.ratio_positive},
                    {"criterion_iii", est.oscillation_positive},
                    {"decay", est.decay_positive}};
  j["verdict"] = est.verdict;
  return j;
}

json to_json(const PoissonTrace& trace) {
  json j;
  json levels = json::array();
  for (const auto& l : trace.levels)
    levels.push_back({{"eps", l.eps},
                      {"n", l.n},
                      {"sup", l.sup},
                      {"witness", to_json(l.witness)},
                      {"profile_converged", l.profile_converged}});
  j["trace"] = levels;
  j["sup"] = trace.sup;
  j["stable"] = trace.stable;
  j["growing"] = trace.growing;
  return j;
}

}  // namespace hqc
