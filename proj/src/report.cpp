#include "paraslant/report.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "paraslant/errors.hpp"

namespace paraslant {

void RunReport::add(ReportRow row) {
  if (row.outcome == "FAIL") ++fails;
  if (row.outcome == "DISCREPANCY") ++discrepancies;
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string digest_bytes(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

namespace {

void emit_canonical(const nlohmann::json& j, std::string& out) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      out += j.dump();
      break;
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    case json::value_t::string:
      out += json(j.get<std::string>()).dump();
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ',';
        first = false;
        emit_canonical(el, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      // nlohmann::json keeps object keys sorted (std::map storage)
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        emit_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    default:
      throw InputError("unsupported JSON value in report");
  }
}

nlohmann::json row_json(const ReportRow& r) {
  nlohmann::json j;
  j["entry"] = r.entry;
  j["analysis"] = r.analysis;
  j["subject"] = r.subject;
  j["point"] = r.point;
  j["lambda"] = r.lambda ? nlohmann::json(*r.lambda) : nlohmann::json();
  j["residual"] = r.residual ? nlohmann::json(*r.residual) : nlohmann::json();
  j["type"] = r.type;
  j["theta"] = r.theta ? nlohmann::json(*r.theta) : nlohmann::json();
  j["outcome"] = r.outcome;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_report(const RunReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["tool_version"] = report.tool_version;
    j["source"] = report.source;
    j["fails"] = report.fails;
    j["discrepancies"] = report.discrepancies;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) rows.push_back(row_json(r));
    j["rows"] = rows;
    j["detail"] = report.detail;
    std::string out;
    emit_canonical(j, out);
    out += '\n';
    return out;
  }
  if (format == "csv") {
    std::string out = "entry,analysis,subject,point,lambda,residual,type,theta,outcome\n";
    for (const auto& r : report.rows) {
      out += csv_escape(r.entry) + ',' + csv_escape(r.analysis) + ',' +
             csv_escape(r.subject) + ',' + csv_escape(r.point) + ',';
      out += (r.lambda ? format_double(*r.lambda) : std::string()) + ',';
      out += (r.residual ? format_double(*r.residual) : std::string()) + ',';
      out += csv_escape(r.type) + ',';
      out += (r.theta ? format_double(*r.theta) : std::string()) + ',';
      out += csv_escape(r.outcome) + '\n';
    }
    return out;
  }
  if (format == "text") {
    std::ostringstream os;
    os << "paraslant " << report.tool_version << "  source: " << report.source
       << "\n";
    for (const auto& r : report.rows) {
      os << r.outcome << "  " << r.entry << "  " << r.analysis << "  "
         << r.subject;
      if (!r.point.empty()) os << "  @" << r.point;
      if (r.lambda) os << "  lambda=" << format_double(*r.lambda);
      if (r.residual) os << "  residual=" << format_double(*r.residual);
      if (!r.type.empty()) os << "  type=" << r.type;
      if (r.theta) os << "  theta=" << format_double(*r.theta);
      os << "\n";
    }
    os << "summary: " << report.fails << " FAIL, " << report.discrepancies
       << " DISCREPANCY, " << report.rows.size() << " rows";
    if (report.wall_time_seconds > 0.0)
      os << "  (" << format_double(report.wall_time_seconds) << " s)";
    os << "\n";
    return os.str();
  }
  throw InputError("unsupported report format '" + format + "'");
}

}  // namespace paraslant
