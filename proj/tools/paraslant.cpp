#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paraslant/manifest.hpp"

namespace {

using namespace paraslant;

struct CliOptions {
  std::optional<int> samples;
  std::optional<uint64_t> seed;
  std::optional<double> tol_slant;
  std::optional<std::string> format;
  std::optional<std::string> out;
  bool strict = false;
};

Overrides to_overrides(const CliOptions& o) {
  Overrides ov;
  ov.samples = o.samples;
  ov.seed = o.seed;
  ov.tol_slant = o.tol_slant;
  ov.strict = o.strict;
  if (!ov.seed) {
    if (const char* env = std::getenv("PARASLANT_SEED")) {
      try {
        ov.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError("PARASLANT_SEED must be an unsigned integer");
      }
    }
  }
  return ov;
}

int write_out(const std::string& bytes, const std::optional<std::string>& path) {
  if (path && !path->empty()) {
    std::ofstream f(*path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << *path << "'\n";
      return 2;
    }
    f << bytes;
    return 0;
  }
  std::cout << bytes;
  return 0;
}

int emit_and_exit(const RunReport& rep, const std::string& format,
                  const std::optional<std::string>& out) {
  std::string bytes = emit_report(rep, format);
  int werr = write_out(bytes, out);
  if (werr) return werr;
  return exit_code(rep);
}

std::string gallery_export_json(const GalleryEntry& e) {
  nlohmann::json j;
  if (!e.cases.empty())
    for (const auto& [k, v] : e.cases.front()) j["chart"]["constants"][k] = v;
  j["ambient"]["gallery"] = e.ambient;
  j["chart"]["params"] = e.params;
  for (size_t i = 0; i < e.params.size(); ++i)
    j["chart"]["domain"][e.params[i]] = {e.domain[i].first, e.domain[i].second};
  j["chart"]["components"] = e.components;
  std::vector<std::string> names;
  for (const auto& [name, idx] : e.distributions) {
    names.push_back(name);
    nlohmann::json basis = nlohmann::json::array();
    for (int k : idx) {
      std::vector<std::string> coeffs(e.params.size(), "0");
      coeffs[static_cast<size_t>(k)] = "1";
      basis.push_back(coeffs);
    }
    j["distributions"][name]["basis"] = basis;
  }
  names.push_back("TM");
  j["analysis"]["classify"] = names;
  if (e.distributions.count("D1") && e.distributions.count("D2"))
    j["analysis"]["decompose"] = {"D1", "D2"};
  j["sampling"]["count"] = 64;
  j["sampling"]["seed"] = 0;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paraslant: slant-structure analysis of immersions into flat "
               "para Kaehler spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions opt;
  app.add_option("--samples", opt.samples, "sample count override");
  app.add_option("--seed", opt.seed, "sampling seed override");
  app.add_option("--tol-slant", opt.tol_slant, "slant constancy tolerance");
  app.add_option("--format", opt.format, "report format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out, "write report to file instead of stdout");
  app.add_flag("--strict", opt.strict, "promote discrepancies to failures");

  std::string manifest_path;
  auto* validate = app.add_subcommand("validate", "schema-check a manifest");
  validate->add_option("manifest", manifest_path, "manifest JSON file")->required();

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "run the analyses of a manifest");
  analyze->add_option("manifest", analyze_path, "manifest JSON file")->required();

  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify-paper",
                                    "check the example gallery claims");
  verify->add_option("ids", ids, "gallery entry ids (default: all)");

  auto* gallery = app.add_subcommand("gallery", "list or export gallery entries");
  auto* glist = gallery->add_subcommand("list", "list entry ids");
  std::string export_id;
  auto* gexport = gallery->add_subcommand("export", "export an entry as a manifest");
  gexport->add_option("id", export_id, "gallery entry id")->required();
  gallery->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      LoadedManifest m = load_manifest(manifest_path);
      RunReport rep = validate_manifest(m);
      return emit_and_exit(rep, opt.format.value_or(m.out_format),
                           opt.out ? opt.out : (m.out_path.empty()
                                                    ? std::nullopt
                                                    : std::optional(m.out_path)));
    }
    if (analyze->parsed()) {
      LoadedManifest m = load_manifest(analyze_path);
      RunReport rep = run_manifest(m, to_overrides(opt));
      return emit_and_exit(rep, opt.format.value_or(m.out_format),
                           opt.out ? opt.out : (m.out_path.empty()
                                                    ? std::nullopt
                                                    : std::optional(m.out_path)));
    }
    if (verify->parsed()) {
      RunReport rep = verify_paper(ids, to_overrides(opt));
      return emit_and_exit(rep, opt.format.value_or("text"), opt.out);
    }
    if (glist->parsed()) {
      std::string out;
      for (const auto& id : gallery_ids()) out += id + "\n";
      return write_out(out, opt.out);
    }
    if (gexport->parsed()) {
      GalleryEntry e = load_example(export_id);
      return write_out(gallery_export_json(e), opt.out);
    }
  } catch (const ExprParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateMetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
