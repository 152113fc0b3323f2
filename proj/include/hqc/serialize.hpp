#pragma once

// JSON forms of maps, corpora, configs and reports.

#include <hqc/bounds.hpp>
#include <hqc/hmap.hpp>
#include <hqc/johndisk.hpp>
#include <hqc/poisson.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hqc {

using json = nlohmann::json;

json to_json(cplx z);
cplx complex_from_json(const json& j);

/// {"kind": "catalog"|"series", "name"?, "coeffs"?, "rotation"?, "scale"?}.
/// Composite parts have no JSON form and raise ParameterError.
json to_json(const AnalyticPart& part);
AnalyticPart part_from_json(const json& j);

/// {"label", "h", "g", "flags": [...], "transform"?}
json to_json(const MapDescriptor& map);
MapDescriptor map_from_json(const json& j);

json to_json(const TransformRecord& rec);

/// One corpus entry; K is the map's quasiconformality constant when it is not 1.
struct CorpusEntry {
  MapDescriptor map;
  double K = 1.0;
};

struct SuiteDef {
  std::vector<std::string> maps;        // empty = every map the suite applies to
  std::vector<std::string> predicates;  // empty = every predicate of the suite
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::map<std::string, SuiteDef> suites;
  const CorpusEntry* find(const std::string& label) const;
};

/// {"maps": [...], "suites"?: {"name": {"maps": [...], "predicates": [...]}}}
Corpus corpus_from_json(const json& j);
Corpus load_corpus(const std::string& path);

/// Fields: alpha, K, eps, tol, slack, seed, grid_level, grid {radial, angular}.
void apply_config_json(Config& cfg, const json& j);

json to_json(const CheckReport& rep);
json to_json(const JohnEstimate& est);
json to_json(const PoissonTrace& trace);

}  // namespace hqc
