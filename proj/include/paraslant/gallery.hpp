#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paraslant/frame.hpp"

namespace paraslant {

// One row of a type table: the constant-inequality conditions selecting
// the row and the slant-type label it promises. Conditions are pairs of
// (expression over the chart constants, relation), relation one of
// ">0", "<0", "=0", "!=0".
struct ClaimRow {
  std::vector<std::pair<std::string, std::string>> conditions;
  std::string label;
};

struct Claim {
  std::string kind;  // lambda-formula | type-label | decomposition-label |
                     // p-invariance | not-slant
  std::string subject;  // distribution name or "TM"
  bool strict = true;   // strict mismatches fail the run; others are recorded
  std::string source;   // citation locator with verbatim quote
  std::string formula;  // lambda-formula only: expression in the constants
  std::vector<std::pair<std::string, std::string>> conditions;  // applicability
  std::vector<ClaimRow> rows;  // type-label row table (may be empty)
  std::string label;           // fixed label when rows is empty
};

struct GalleryEntry {
  std::string id;
  std::string ambient;  // gallery structure name
  std::vector<std::string> params;
  std::vector<std::pair<double, double>> domain;
  std::vector<std::string> components;
  std::vector<std::string> constant_names;
  std::vector<std::map<std::string, double>> cases;  // default assignments
  std::vector<std::pair<std::string, std::string>> admissibility;
  std::map<std::string, std::vector<int>> distributions;  // name -> indices
  std::vector<Claim> claims;

  ImmersionChart chart(const std::map<std::string, double>& constants) const;
};

std::vector<std::string> gallery_ids();
GalleryEntry load_example(const std::string& id);

// True when the assignment satisfies every admissibility condition; on
// failure *reason names the violated condition.
bool case_admissible(const GalleryEntry& entry,
                     const std::map<std::string, double>& constants,
                     std::string* reason);

// A claim resolved against a concrete constant assignment.
struct ExpectedOutcome {
  std::string kind;
  std::string subject;
  std::optional<double> lambda;
  std::string label;  // "unspecified" when no table row matches
  bool strict = true;
  std::string source;
};

std::vector<ExpectedOutcome> expected_claims(
    const GalleryEntry& entry, const std::map<std::string, double>& constants);

}  // namespace paraslant
