#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace paraslant {

// One row of the tabular report; maps 1:1 onto the CSV contract
//   entry,analysis,subject,point,lambda,residual,type,theta,outcome
struct ReportRow {
  std::string entry;
  std::string analysis;
  std::string subject;
  std::string point;
  std::optional<double> lambda;
  std::optional<double> residual;
  std::string type;
  std::optional<double> theta;
  std::string outcome;  // PASS | FAIL | DISCREPANCY | UNSPECIFIED | INFO | SKIPPED
};

struct RunReport {
  std::string tool_version;
  std::string source;  // manifest digest or "gallery"
  std::vector<ReportRow> rows;
  nlohmann::json detail = nlohmann::json::object();
  double wall_time_seconds = 0.0;  // text output only, never serialised to JSON
  int fails = 0;
  int discrepancies = 0;

  void add(ReportRow row);
};

// Round-trip-exact float formatting (17 significant digits).
std::string format_double(double v);

// format is one of json | csv | text. JSON is canonical: sorted keys,
// fixed float formatting, no timing data.
std::string emit_report(const RunReport& report, const std::string& format);

// FNV-1a hash of a byte string, hex-encoded; used as the manifest digest.
std::string digest_bytes(const std::string& bytes);

}  // namespace paraslant
