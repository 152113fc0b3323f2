#pragma once

// Command-line front end. `run` is the whole program minus argv handling so
// tests can drive it in-process.

#include <hqc/bounds.hpp>
#include <hqc/serialize.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hqc::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

/// args excludes the program name, e.g. {"eval", "koebe", "0.5+0i", "--corpus", "maps.json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.5", "0.5+0.2i", "0.5-0.2i", "-0.3i", "0.5,0.2" or "(0.5,0.2)".
cplx parse_complex(const std::string& text);

/// Names of the built-in suites.
std::vector<std::string> builtin_suites();

/// Reports of one suite in canonical order (predicate, then map, then witness).
/// Unknown suite or map names raise ParameterError; maps that fail the
/// sense-preservation scan raise WitnessError.
std::vector<CheckReport> run_suite(const std::string& name, const Corpus& corpus, const Config& cfg);

/// Exit code for a set of reports: advisory failures do not count.
int aggregate_exit(const std::vector<CheckReport>& reports);

}  // namespace hqc::cli
