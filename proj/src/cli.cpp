#include <hqc/cli.hpp>

#include <hqc/geometry.hpp>
#include <hqc/johndisk.hpp>
#include <hqc/poisson.hpp>
#include <hqc/radial.hpp>
#include <hqc/transforms.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

namespace hqc::cli {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kClassicalPredicates{
    "boundary-distance", "distortion", "harnack", "local-oscillation",
    "norm-growth", "radial-decay", "radial-quotient", "two-sided-growth"};

bool known_predicate(const std::string& p) {
  return p == "stolz-angle" ||
         std::find(kClassicalPredicates.begin(), kClassicalPredicates.end(), p) != kClassicalPredicates.end();
}

std::vector<cplx> harnack_centres() {
  std::vector<cplx> z;
  for (int k = 0; k < 8; ++k) z.push_back(std::polar(0.9, kPi * k / 4.0));
  return z;
}

CheckReport run_predicate(const std::string& pred, const MapDescriptor& map, const Config& cfg) {
  if (pred == "distortion") return check_distortion(map, cfg, disk_grid(cfg.grid, 0.999));
  if (pred == "two-sided-growth") return check_two_sided_growth(map, cfg, growth_pairs());
  if (pred == "norm-growth") return check_norm_growth(map, cfg, disk_grid(cfg.grid, 0.999));
  if (pred == "radial-decay") return check_radial_decay(map, cfg, radial_triples());
  if (pred == "boundary-distance") return check_boundary_distance(map, cfg, disk_grid({6, 12}, 0.95));
  if (pred == "harnack" || pred == "local-oscillation") {
    std::vector<CheckReport> parts;
    for (const cplx z0 : harnack_centres()) {
      parts.push_back(pred == "harnack" ? check_harnack(map, cfg, z0, WindowParams{})
                                        : check_local_oscillation(map, cfg, z0, WindowParams{}));
    }
    return merge_reports(parts);
  }
  if (pred == "radial-quotient") {
    std::vector<CheckReport> parts;
    for (int k = 0; k < 4; ++k) parts.push_back(check_radial_quotient(map, cfg, 0.25, 0.99, kPi * k / 2.0));
    return merge_reports(parts);
  }
  throw ParameterError("unknown predicate '" + pred + "'");
}

CheckReport run_stolz(const Config& cfg) {
  CheckReport rep = check_stolz({0.5, 0.8, 0.95}, 10000, cfg.seed);
  rep.grid = cfg.grid;
  return rep;
}

/// Rejects maps that are not sense-preserving on the configured grid.
void validate_map(const MapDescriptor& map, const Config& cfg) {
  try {
    qc_constant(map, disk_grid(cfg.grid, 0.999));
  } catch (const WitnessError& e) {
    std::ostringstream msg;
    msg << "map '" << map.label() << "' is not sense-preserving: " << e.what();
    throw WitnessError(msg.str(), e.witness());
  }
}

bool report_less(const CheckReport& a, const CheckReport& b) {
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  if (a.map != b.map) return a.map < b.map;
  if (a.witness.real() != b.witness.real()) return a.witness.real() < b.witness.real();
  return a.witness.imag() < b.witness.imag();
}

std::vector<CheckReport> run_maps(const std::vector<const CorpusEntry*>& entries,
                                  const std::vector<std::string>& predicates, const Config& base,
                                  bool classical) {
  std::vector<CheckReport> out;
  for (const CorpusEntry* e : entries) validate_map(e->map, base);
  for (const std::string& pred : predicates) {
    if (pred == "stolz-angle") {
      out.push_back(run_stolz(base));
      continue;
    }
    for (const CorpusEntry* e : entries) {
      Config cfg = base;
      if (classical) {
        cfg.alpha = 2.0;
        cfg.K = 1.0;
      } else {
        cfg.K = std::max(base.K, e->K);
      }
      out.push_back(run_predicate(pred, e->map, cfg));
    }
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

std::vector<const CorpusEntry*> all_entries(const Corpus& corpus, bool analytic_only) {
  std::vector<const CorpusEntry*> v;
  for (const auto& e : corpus.entries)
    if (!analytic_only || e.map.is_analytic()) v.push_back(&e);
  return v;
}

const CorpusEntry& lookup(const Corpus& corpus, const std::string& label) {
  const CorpusEntry* e = corpus.find(label);
  if (!e) throw ParameterError("unknown map '" + label + "'");
  return *e;
}

json nullable(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json eval_json(const MapDescriptor& map, cplx z) {
  const cplx f = map.eval(z);
  const WirtingerPair p = map.wirtinger(z);
  json j;
  j["map"] = map.label();
  j["z"] = to_json(z);
  j["f"] = to_json(f);
  j["fz"] = to_json(p.fz);
  j["fzb"] = to_json(p.fzb);
  j["dnorm"] = dnorm(p);
  j["dmin"] = dmin(p);
  j["jacobian"] = jacobian(p);
  j["dilatation"] = nullable(dilatation(p));
  if (map.near_boundary_warning(z)) j["warning"] = "series evaluated beyond the safe radius";
  return j;
}

json config_json(const Config& cfg) {
  return {{"alpha", cfg.alpha},
          {"K", cfg.K},
          {"eps", cfg.eps},
          {"tol", cfg.quad_abs_tol},
          {"slack", cfg.slack},
          {"seed", cfg.seed},
          {"grid", {{"radial", cfg.grid.radial}, {"angular", cfg.grid.angular}}}};
}

std::string file_label(const std::string& label) {
  std::string s = label;
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p, std::ios::binary | std::ios::trunc);
  if (!os) throw ParameterError("cannot write '" + p.string() + "'");
  return os;
}

/// Writes every report artifact under `dir`; returns the check exit code.
int write_report(const std::filesystem::path& dir, const std::string& corpus_path, const Corpus& corpus,
                 const Config& cfg) {
  std::filesystem::create_directories(dir);
  const std::vector<std::string> suites{"analytic-classical", "harmonic", "geometry"};

  json manifest;
  manifest["corpus"] = corpus_path;
  manifest["config"] = config_json(cfg);
  manifest["suites"] = suites;
  manifest["output"] = dir.string();
  manifest["seed"] = cfg.seed;
  json labels = json::array();
  for (const auto& e : corpus.entries) labels.push_back(e.map.label());
  manifest["maps"] = labels;
  open_out(dir / "manifest.json") << manifest.dump(2) << '\n';

  std::vector<CheckReport> all;
  {
    auto os = open_out(dir / "checks.jsonl");
    for (const auto& s : suites) {
      const auto reps = run_suite(s, corpus, cfg);
      for (const auto& r : reps) {
        json j = to_json(r);
        j["suite"] = s;
        os << j.dump() << '\n';
      }
      all.insert(all.end(), reps.begin(), reps.end());
    }
  }
  {
    auto os = open_out(dir / "john.jsonl");
    for (const auto& e : corpus.entries) os << to_json(estimate_john(e.map)).dump() << '\n';
  }
  {
    auto os = open_out(dir / "poisson.jsonl");
    for (const auto& e : corpus.entries) {
      json j = to_json(poisson_sup(e.map));
      j["map"] = e.map.label();
      os << j.dump() << '\n';
    }
  }
  {
    auto os = open_out(dir / "sh2.jsonl");
    const RegionSample grid = disk_grid(cfg.grid, 0.999);
    for (const auto& e : corpus.entries) {
      if (!e.map.flags().sh && !e.map.flags().sh0) continue;
      const Sh2Margin m = sh2_margin(e.map, grid);
      os << json{{"map", e.map.label()},
                 {"grid_sup", m.grid_sup},
                 {"boundary_limit", m.boundary_limit},
                 {"witness", to_json(m.witness)},
                 {"member", m.member}}
                .dump()
         << '\n';
    }
  }
  for (const auto& e : corpus.entries) {
    auto os = open_out(dir / ("radial_" + file_label(e.map.label()) + ".csv"));
    write_csv(os, growth_ratio(e.map, 0.0, default_r_grid(), cfg.quad_abs_tol));
  }
  {
    auto os = open_out(dir / "stolz_region.csv");
    write_csv(os, stolz_sample(0.8, 512, cfg.seed));
  }
  return aggregate_exit(all);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("bad number '" + item + "'");
    }
    if (used != item.size()) throw ParameterError("bad number '" + item + "'");
    v.push_back(x);
  }
  return v;
}

}  // namespace

cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  static const std::string num = R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex pair("(" + num + "),(" + num + ")");
  static const std::regex real_only("(" + num + ")");
  static const std::regex imag_only("(" + num + "|[+-]?)i");
  static const std::regex full("(" + num + ")([+-](?:\\d+\\.?\\d*|\\.\\d+)?(?:[eE][+-]?\\d+)?)i");
  auto coef = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return std::stod(t);
  };
  std::smatch m;
  if (std::regex_match(s, m, pair)) return {std::stod(m[1]), std::stod(m[2])};
  if (std::regex_match(s, m, real_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(s, m, imag_only)) return {0.0, coef(m[1])};
  if (std::regex_match(s, m, full)) return {std::stod(m[1]), coef(m[2])};
  throw ParameterError("cannot parse complex number '" + raw + "'");
}

std::vector<std::string> builtin_suites() { return {"analytic-classical", "empty", "geometry", "harmonic"}; }

std::vector<CheckReport> run_suite(const std::string& name, const Corpus& corpus, const Config& cfg) {
  cfg.validate();
  if (auto it = corpus.suites.find(name); it != corpus.suites.end()) {
    const SuiteDef& suite_def = it->second;
    std::vector<const CorpusEntry*> entries;
    if (suite_def.maps.empty()) entries = all_entries(corpus, false);
    for (const auto& label : suite_def.maps) entries.push_back(&lookup(corpus, label));
    std::vector<std::string> preds = suite_def.predicates.empty() ? kClassicalPredicates : suite_def.predicates;
    for (const auto& p : preds)
      if (!known_predicate(p)) throw ParameterError("suite '" + name + "': unknown predicate '" + p + "'");
    return run_maps(entries, preds, cfg, false);
  }
  if (name == "empty") return {};
  if (name == "analytic-classical") return run_maps(all_entries(corpus, true), kClassicalPredicates, cfg, true);
  if (name == "harmonic") return run_maps(all_entries(corpus, false), kClassicalPredicates, cfg, false);
  if (name == "geometry") return {run_stolz(cfg)};
  throw ParameterError("unknown suite '" + name + "'");
}

int aggregate_exit(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass && !r.advisory) return kCheckFailure;
  return kPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for harmonic quasiconformal maps of the unit disk", "hqc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string corpus_path = "corpus/maps.json";
  std::string config_path;
  std::optional<double> alpha, bigk, eps, tol;
  std::optional<int> grid_level;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "hqc-report";

  app.add_option("--corpus", corpus_path, "corpus JSON");
  app.add_option("--config", config_path, "config JSON; flags override it");
  app.add_option("--alpha", alpha, "order of the class");
  app.add_option("--bigk", bigk, "quasiconformality constant K");
  app.add_option("--out", out_dir, "output directory for report");
  app.add_option("--grid-level", grid_level, "grid refinement level");
  app.add_option("--eps", eps, "ring offset");
  app.add_option("--tol", tol, "quadrature tolerance");
  app.add_option("--seed", seed, "seed for sampled regions");

  std::string label, z_text, suite;
  double theta = 0.0;
  std::string r_list;

  auto* eval = app.add_subcommand("eval", "f and its derivative functionals at z");
  eval->add_option("label", label)->required();
  eval->add_option("z", z_text)->required();

  auto* radial = app.add_subcommand("radial", "radial profile CSV");
  radial->add_option("label", label)->required();
  radial->add_option("theta", theta)->required();
  radial->add_option("--r", r_list, "comma-separated radii");

  auto* check = app.add_subcommand("check", "run a check suite");
  check->add_option("suite", suite)->required();

  auto* john = app.add_subcommand("john", "John-disk estimate");
  john->add_option("label", label)->required();

  auto* poisson = app.add_subcommand("poisson", "Poisson functional sup trace");
  poisson->add_option("label", label)->required();

  auto* report = app.add_subcommand("report", "write every report into --out");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Config cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ParameterError("cannot open config '" + config_path + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw ParameterError("config '" + config_path + "': " + e.what());
      }
      apply_config_json(cfg, j);
    }
    if (alpha) cfg.alpha = *alpha;
    if (bigk) cfg.K = *bigk;
    if (eps) cfg.eps = *eps;
    if (tol) cfg.quad_abs_tol = cfg.quad_rel_tol = *tol;
    if (seed) cfg.seed = *seed;
    if (grid_level) {
      if (*grid_level < 0) throw ParameterError("--grid-level must be >= 0");
      cfg.grid = cfg.grid.refined(*grid_level);
    }
    cfg.validate();

    const Corpus corpus = load_corpus(corpus_path);

    if (*eval) {
      const auto& e = lookup(corpus, label);
      out << eval_json(e.map, parse_complex(z_text)).dump() << '\n';
      return kPass;
    }
    if (*radial) {
      const auto& e = lookup(corpus, label);
      const std::vector<double> grid = r_list.empty() ? default_r_grid() : parse_list(r_list);
      write_csv(out, growth_ratio(e.map, theta, grid, cfg.quad_abs_tol));
      return kPass;
    }
    if (*check) {
      const auto reps = run_suite(suite, corpus, cfg);
      for (const auto& r : reps) out << to_json(r).dump() << '\n';
      return aggregate_exit(reps);
    }
    if (*john) {
      out << to_json(estimate_john(lookup(corpus, label).map)).dump() << '\n';
      return kPass;
    }
    if (*poisson) {
      const auto& e = lookup(corpus, label);
      json j = to_json(poisson_sup(e.map));
      j["map"] = e.map.label();
      out << j.dump() << '\n';
      return kPass;
    }
    if (*report) return write_report(out_dir, corpus_path, corpus, cfg);
  } catch (const WitnessError& e) {
    err << "hqc: " << e.what() << " at (" << e.witness().real() << ", " << e.witness().imag() << ")\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  } catch (const PrecisionError& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hqc: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hqc::cli
