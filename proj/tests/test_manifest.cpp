#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "paraslant/manifest.hpp"

using namespace paraslant;

namespace {

std::string write_temp(const std::string& name, const std::string& bytes) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path, std::ios::binary);
  f << bytes;
  return path.string();
}

const char* kManifest = R"({
  "ambient": {"gallery": "J2-g2-R8"},
  "chart": {
    "params": ["u1", "v1", "u2", "v2"],
    "domain": {"u1": [-2, 2], "v1": [-2, 2], "u2": [-2, 2], "v2": [-2, 2]},
    "constants": {"a": 1, "b": 2, "c": 1, "d": 2},
    "components": ["a*u1", "v1", "b*u1", "u1", "c*u2", "v2", "d*u2", "u2"]
  },
  "distributions": {
    "D1": {"basis": [["1", "0", "0", "0"], ["0", "1", "0", "0"]]},
    "D2": {"basis": [["0", "0", "1", "0"], ["0", "0", "0", "1"]]}
  },
  "analysis": {
    "classify": ["D1", "D2", "TM"],
    "decompose": ["D1", "D2"],
    "integrability": true,
    "geodesy": true,
    "cr_check": {"c": 4.0}
  },
  "sampling": {"count": 16, "seed": 5},
  "output": {"format": "json"}
})";

}  // namespace

TEST_CASE("manifest loads and analyzes") {
  std::string path = write_temp("paraslant_manifest_ok.json", kManifest);
  LoadedManifest m = load_manifest(path);
  CHECK(m.ambient.name == "J2-g2-R8");
  CHECK(m.chart.param_count() == 4);
  CHECK(m.distributions.size() == 2);
  CHECK(m.classify.size() == 3);
  REQUIRE(m.decompose.has_value());
  CHECK(m.plan.count == 16);
  CHECK(m.plan.seed == 5);
  CHECK(m.out_format == "json");
  CHECK(!m.digest.empty());

  RunReport val = validate_manifest(m);
  CHECK(val.fails == 0);
  CHECK(exit_code(val) == 0);

  RunReport rep = run_manifest(m, Overrides{});
  CHECK(exit_code(rep) == 0);
  // classification detail for the first factor: slant-2 with lambda 1/4
  REQUIRE(rep.detail.contains("classify"));
  CHECK(rep.detail["classify"]["D1"]["type"] == "slant-2");
  CHECK(std::fabs(rep.detail["classify"]["D1"]["lambda"].get<double>() - 0.25) <= 1e-10);
  CHECK(rep.detail["decompose"]["label"] == "bi-slant");
  std::remove(path.c_str());
}

TEST_CASE("overrides replace sampling settings") {
  std::string path = write_temp("paraslant_manifest_ov.json", kManifest);
  LoadedManifest m = load_manifest(path);
  Overrides ov;
  ov.samples = 4;
  ov.seed = 99;
  RunReport rep = run_manifest(m, ov);
  // per-sample classify rows: 1 median row + 4 sample rows per subject
  int d1_rows = 0;
  for (const auto& r : rep.rows)
    if (r.analysis == "classify" && r.subject == "D1") ++d1_rows;
  CHECK(d1_rows == 5);
  std::remove(path.c_str());
}

TEST_CASE("schema violations name the offending key") {
  auto expect_error = [](const std::string& name, const std::string& body,
                         const std::string& needle) {
    std::string path = write_temp(name, body);
    try {
      load_manifest(path);
      FAIL_CHECK("expected InputError for ", needle);
    } catch (const InputError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                    e.what());
    }
    std::remove(path.c_str());
  };

  expect_error("m1.json", "{}", "ambient");
  expect_error("m2.json", "{\"ambient\": {\"gallery\": \"J2-g2-R8\"}}", "chart");
  expect_error("m3.json", "not json", "parse");
  expect_error("m4.json",
               "{\"ambient\": {\"J\": [[1,0],[0,1]], \"g\": [[1,0],[0,-1]]},"
               "\"chart\": {\"params\": [\"u\"], \"domain\": {\"u\": [0,1]},"
               "\"components\": [\"u\", \"0\"]}}",
               "ambient structure invalid");
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), InputError);
}

TEST_CASE("exit code contract") {
  RunReport ok;
  ok.add({"e", "a", "s", "", std::nullopt, std::nullopt, "", std::nullopt, "PASS"});
  CHECK(exit_code(ok) == 0);
  ok.add({"e", "a", "s", "", std::nullopt, std::nullopt, "", std::nullopt,
          "DISCREPANCY"});
  CHECK(exit_code(ok) == 0);
  ok.add({"e", "a", "s", "", std::nullopt, std::nullopt, "", std::nullopt, "FAIL"});
  CHECK(exit_code(ok) == 1);
}

TEST_CASE("verify-paper respects entry selection") {
  RunReport rep = verify_paper({"final-half-half"}, Overrides{});
  CHECK(rep.fails == 0);
  CHECK(!rep.rows.empty());
  for (const auto& r : rep.rows) CHECK(r.entry == "final-half-half");
  CHECK_THROWS_AS(verify_paper({"bogus-id"}, Overrides{}), InputError);
}
