#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paraslant/gallery.hpp"
#include "paraslant/geo.hpp"
#include "paraslant/report.hpp"
#include "paraslant/slant.hpp"

namespace paraslant {

inline constexpr const char* kToolVersion = "1.0.0";

// Command-line / environment overrides applied on top of a manifest.
struct Overrides {
  std::optional<int> samples;
  std::optional<uint64_t> seed;
  std::optional<double> tol_slant;
  bool strict = false;  // promote DISCREPANCY to FAIL
};

struct LoadedManifest {
  AmbientStructure ambient;
  ImmersionChart chart;
  std::map<std::string, DistributionSpec> distributions;
  std::map<std::string, std::vector<std::string>> fields;
  std::vector<std::string> classify;  // distribution names or "TM"
  std::optional<std::pair<std::string, std::string>> decompose;
  bool integrability = false;
  bool geodesy = false;
  std::optional<double> cr_c;
  SamplingPlan plan;
  Tolerances tol;
  std::string out_format = "text";
  std::string out_path;  // empty = stdout
  std::string digest;
};

// Parses and schema-checks a manifest JSON file. Any violation throws
// InputError naming the offending key.
LoadedManifest load_manifest(const std::string& path);

// Ambient/chart/distribution validation only; FAIL rows for violated
// structure axioms.
RunReport validate_manifest(const LoadedManifest& m);

// Full analysis pipeline: validate ambient, classify, decompose,
// integrability, geodesy, curvature check.
RunReport run_manifest(const LoadedManifest& m, const Overrides& ov);

// Runs every gallery entry's claims (or just the listed ids).
RunReport verify_paper(const std::vector<std::string>& ids, const Overrides& ov);

// Exit code contract: 0 if no FAIL, 1 if any FAIL.
int exit_code(const RunReport& report);

}  // namespace paraslant
