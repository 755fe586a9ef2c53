#include <doctest.h>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "paraslant/errors.hpp"
#include "paraslant/report.hpp"

using namespace paraslant;

namespace {

RunReport sample_report() {
  RunReport r;
  r.tool_version = "1.0.0";
  r.source = "gallery";
  r.wall_time_seconds = 1.25;
  r.add({"aw1", "classify", "D1", "", 0.25, 1e-12, "slant-2", 1.0471975511965976,
         "PASS"});
  r.add({"aw1", "classify", "D2", "", std::nullopt, std::nullopt,
         "needs,escaping \"here\"", std::nullopt, "FAIL"});
  r.detail["note"] = "detail payload";
  r.detail["numbers"] = {1.0, 0.5};
  return r;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    double x = dist(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(std::strtod(format_double(0.1).c_str(), nullptr) == 0.1);
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("fail and discrepancy counters") {
  RunReport r = sample_report();
  CHECK(r.fails == 1);
  CHECK(r.discrepancies == 0);
  r.add({"x", "y", "z", "", std::nullopt, std::nullopt, "", std::nullopt,
         "DISCREPANCY"});
  CHECK(r.discrepancies == 1);
}

TEST_CASE("csv header and escaping") {
  std::string csv = emit_report(sample_report(), "csv");
  CHECK(csv.rfind("entry,analysis,subject,point,lambda,residual,type,theta,outcome\n",
                  0) == 0);
  CHECK(csv.find("\"needs,escaping \"\"here\"\"\"") != std::string::npos);
  CHECK(csv.find("0.25") != std::string::npos);
}

TEST_CASE("json is canonical and timing-free") {
  RunReport r = sample_report();
  std::string a = emit_report(r, "json");
  r.wall_time_seconds = 99.0;  // timing must not leak into the bytes
  std::string b = emit_report(r, "json");
  CHECK(a == b);
  // parses back and keys are sorted at the top level
  auto j = nlohmann::json::parse(a);
  CHECK(j["tool_version"] == "1.0.0");
  CHECK(j["rows"].size() == 2);
  CHECK(j.find("wall_time_seconds") == j.end());
  std::string prev;
  for (auto it = j.begin(); it != j.end(); ++it) {
    CHECK(prev <= it.key());
    prev = it.key();
  }
  // canonical float formatting appears verbatim
  CHECK(a.find("0.25") != std::string::npos);
  CHECK(a.find("1.0471975511965976") != std::string::npos);
}

TEST_CASE("text format carries a summary") {
  std::string t = emit_report(sample_report(), "text");
  CHECK(t.find("PASS") != std::string::npos);
  CHECK(t.find("FAIL") != std::string::npos);
  CHECK(t.find("summary:") != std::string::npos);
}

TEST_CASE("unknown format is rejected") {
  CHECK_THROWS_AS(emit_report(sample_report(), "xml"), InputError);
}

TEST_CASE("digest is stable and content sensitive") {
  std::string d1 = digest_bytes("abc");
  CHECK(d1 == digest_bytes("abc"));
  CHECK(d1 != digest_bytes("abd"));
  CHECK(!d1.empty());
  for (char c : d1) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
}
