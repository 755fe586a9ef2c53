#include "paraslant/manifest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace paraslant {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError("manifest: missing key '" + where + key + "'");
  return *it;
}

Mat parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError("manifest: '" + where + "' must be a matrix (array of arrays)");
  const int r = static_cast<int>(j.size());
  const int c = static_cast<int>(j[0].size());
  Mat m = zeros(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c)
      throw InputError("manifest: ragged matrix in '" + where + "'");
    for (int k = 0; k < c; ++k) {
      if (!j[i][k].is_number())
        throw InputError("manifest: non-numeric entry in '" + where + "'");
      m(i, k) = j[i][k].get<double>();
    }
  }
  return m;
}

std::vector<std::string> parse_string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("manifest: '" + where + "' must be an array");
  std::vector<std::string> out;
  for (const auto& el : j) {
    if (!el.is_string())
      throw InputError("manifest: '" + where + "' must contain strings");
    out.push_back(el.get<std::string>());
  }
  return out;
}

std::string point_label(const std::vector<double>& u) {
  std::string s = "(";
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += ';';
    s += format_double(u[i]);
  }
  return s + ")";
}

std::string case_label(const std::map<std::string, double>& c) {
  if (c.empty()) return "default";
  std::string s;
  for (const auto& [k, v] : c) {
    if (!s.empty()) s += ';';
    s += k + "=" + format_double(v);
  }
  return s;
}

json samples_json(const SlantReport& r) {
  json arr = json::array();
  for (const auto& s : r.samples) {
    json e;
    e["point"] = s.point;
    e["lambda"] = s.lambda;
    e["residual"] = s.residual;
    arr.push_back(e);
  }
  return arr;
}

json slant_json(const SlantReport& r) {
  json j;
  j["lambda"] = r.lambda;
  j["residual"] = r.residual;
  j["lambda_spread"] = r.lambda_spread;
  j["type"] = slant_type_name(r.type);
  if (r.theta) j["theta"] = *r.theta;
  j["causal_pattern"] = r.causal_pattern;
  j["samples"] = samples_json(r);
  return j;
}

void apply(const Overrides& ov, SamplingPlan& plan, Tolerances& tol) {
  if (ov.samples) plan.count = *ov.samples;
  if (ov.seed) plan.seed = *ov.seed;
  if (ov.tol_slant) tol.slant = *ov.tol_slant;
}

}  // namespace

LoadedManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open manifest '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest: JSON parse error: ") + e.what());
  }

  LoadedManifest m;
  m.digest = digest_bytes(bytes);

  const json& amb = require(j, "ambient", "");
  if (amb.contains("gallery")) {
    m.ambient = gallery_structure(amb["gallery"].get<std::string>());
  } else {
    m.ambient.name = amb.value("name", "custom");
    m.ambient.J = parse_matrix(require(amb, "J", "ambient."), "ambient.J");
    m.ambient.g = parse_matrix(require(amb, "g", "ambient."), "ambient.g");
    m.ambient.dim = m.ambient.J.rows();
  }
  auto violations = validate_structure(m.ambient);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "manifest: ambient structure invalid:";
    for (const auto& v : violations) os << " [" << v.axiom << "]";
    throw InputError(os.str());
  }

  const json& ch = require(j, "chart", "");
  auto params = parse_string_list(require(ch, "params", "chart."), "chart.params");
  const json& dom = require(ch, "domain", "chart.");
  std::vector<std::pair<double, double>> domain;
  for (const auto& p : params) {
    const json& iv = require(dom, p, "chart.domain.");
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      throw InputError("manifest: 'chart.domain." + p + "' must be [lo, hi]");
    domain.emplace_back(iv[0].get<double>(), iv[1].get<double>());
  }
  std::map<std::string, double> constants;
  if (ch.contains("constants")) {
    for (auto it = ch["constants"].begin(); it != ch["constants"].end(); ++it) {
      if (!it.value().is_number())
        throw InputError("manifest: 'chart.constants." + it.key() + "' must be a number");
      constants[it.key()] = it.value().get<double>();
    }
  }
  auto components =
      parse_string_list(require(ch, "components", "chart."), "chart.components");
  m.chart = ImmersionChart::make(m.ambient, params, domain, constants, components);

  if (j.contains("distributions")) {
    for (auto it = j["distributions"].begin(); it != j["distributions"].end(); ++it) {
      const json& basis = require(it.value(), "basis", "distributions." + it.key() + ".");
      std::vector<std::vector<std::string>> rows;
      if (!basis.is_array())
        throw InputError("manifest: 'distributions." + it.key() + ".basis' must be an array");
      for (const auto& v : basis)
        rows.push_back(parse_string_list(v, "distributions." + it.key() + ".basis"));
      m.distributions.emplace(it.key(),
                              DistributionSpec::make(it.key(), rows, m.chart));
    }
  }
  if (j.contains("fields")) {
    for (auto it = j["fields"].begin(); it != j["fields"].end(); ++it) {
      auto coeffs = parse_string_list(it.value(), "fields." + it.key());
      make_field(coeffs, m.chart);  // validates
      m.fields[it.key()] = coeffs;
    }
  }

  if (j.contains("analysis")) {
    const json& an = j["analysis"];
    if (an.contains("classify"))
      m.classify = parse_string_list(an["classify"], "analysis.classify");
    if (an.contains("decompose")) {
      auto pair = parse_string_list(an["decompose"], "analysis.decompose");
      if (pair.size() != 2)
        throw InputError("manifest: 'analysis.decompose' needs exactly two names");
      m.decompose = {pair[0], pair[1]};
    }
    m.integrability = an.value("integrability", false);
    m.geodesy = an.value("geodesy", false);
    if (an.contains("cr_check"))
      m.cr_c = require(an["cr_check"], "c", "analysis.cr_check.").get<double>();
  }
  for (const auto& name : m.classify)
    if (name != "TM" && !m.distributions.count(name))
      throw InputError("manifest: 'analysis.classify' references unknown distribution '" +
                       name + "'");
  if (m.decompose) {
    for (const auto& name : {m.decompose->first, m.decompose->second})
      if (!m.distributions.count(name))
        throw InputError("manifest: 'analysis.decompose' references unknown distribution '" +
                         name + "'");
  }
  if ((m.integrability || m.geodesy || m.cr_c) && !m.decompose)
    throw InputError(
        "manifest: integrability/geodesy/cr_check require 'analysis.decompose'");

  if (j.contains("sampling")) {
    m.plan.count = j["sampling"].value("count", m.plan.count);
    m.plan.seed = j["sampling"].value("seed", m.plan.seed);
  }
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    m.tol.slant = t.value("slant", m.tol.slant);
    m.tol.boundary = t.value("boundary", m.tol.boundary);
    m.tol.causal = t.value("causal", m.tol.causal);
  }
  if (j.contains("output")) {
    m.out_format = j["output"].value("format", m.out_format);
    m.out_path = j["output"].value("path", m.out_path);
  }
  return m;
}

RunReport validate_manifest(const LoadedManifest& m) {
  RunReport rep;
  rep.tool_version = kToolVersion;
  rep.source = m.digest;
  rep.add({"manifest", "validate", m.ambient.name, "", std::nullopt, std::nullopt,
           "ambient", std::nullopt, "PASS"});
  rep.add({"manifest", "validate", "chart", "", std::nullopt, std::nullopt,
           std::to_string(m.chart.param_count()) + " params", std::nullopt, "PASS"});
  for (const auto& [name, d] : m.distributions)
    rep.add({"manifest", "validate", name, "", std::nullopt, std::nullopt,
             std::to_string(d.dim()) + "-dim", std::nullopt, "PASS"});
  return rep;
}

RunReport run_manifest(const LoadedManifest& m, const Overrides& ov) {
  SamplingPlan plan = m.plan;
  Tolerances tol = m.tol;
  apply(ov, plan, tol);

  RunReport rep;
  rep.tool_version = kToolVersion;
  rep.source = m.digest;
  rep.add({"manifest", "validate", m.ambient.name, "", std::nullopt, std::nullopt,
           "ambient", std::nullopt, "PASS"});

  for (const auto& name : m.classify) {
    std::optional<DistributionSpec> d;
    if (name != "TM") d = m.distributions.at(name);
    SlantReport r = classify_slant(m.chart, d, plan, tol);
    rep.add({"manifest", "classify", name, "median", r.lambda, r.residual,
             slant_type_name(r.type), r.theta, "INFO"});
    for (const auto& s : r.samples)
      rep.add({"manifest", "classify", name, point_label(s.point), s.lambda,
               s.residual, slant_type_name(r.type), std::nullopt, "INFO"});
    rep.detail["classify"][name] = slant_json(r);
  }

  if (m.decompose) {
    const auto& d1 = m.distributions.at(m.decompose->first);
    const auto& d2 = m.distributions.at(m.decompose->second);
    BiSlantReport b = decompose_bislant(m.chart, d1, d2, plan, tol);
    rep.add({"manifest", "decompose", m.decompose->first + "+" + m.decompose->second,
             "", std::nullopt, std::nullopt, b.label, std::nullopt,
             b.label == "invalid" ? "FAIL" : "INFO"});
    json jd;
    jd["orthogonal"] = b.orthogonal;
    jd["spanning"] = b.spanning;
    jd["label"] = b.label;
    jd["witness"] = b.witness;
    jd[m.decompose->first] = slant_json(b.report1);
    jd[m.decompose->second] = slant_json(b.report2);
    rep.detail["decompose"] = jd;

    if (m.integrability) {
      IntegrabilityReport ir = integrability_report(m.chart, d1, d2, plan, tol);
      auto row = [&](const std::string& subj, double v) {
        rep.add({"manifest", "integrability", subj, "", std::nullopt, v, "",
                 std::nullopt, "INFO"});
        rep.detail["integrability"][subj] = v;
      };
      row("holomorphic-h", ir.holo_h);
      row("slant-bracket", ir.slant_bracket);
      row("totally-real", ir.totally_real);
      row("bracket-" + m.decompose->first, ir.bracket_d1);
      row("bracket-" + m.decompose->second, ir.bracket_d2);
    }
    if (m.geodesy) {
      GeodesyReport gr = geodesy_report(m.chart, d1, d2, plan, tol);
      auto row = [&](const std::string& subj, double v) {
        rep.add({"manifest", "geodesy", subj, "", std::nullopt, v, "",
                 std::nullopt, "INFO"});
        rep.detail["geodesy"][subj] = v;
      };
      row("tg-" + m.decompose->first, gr.tg1);
      row("tg-" + m.decompose->second, gr.tg2);
      row("mixed", gr.mixed);
      row("mixed-cond-P", gr.mixed_cond1);
      row("mixed-cond-F", gr.mixed_cond2);
      row("umbilicity-defect", gr.umbilicity_defect);
      row("PA-commute", gr.pa_commute);
      row("f2-dichotomy", gr.f2_dichotomy);
      rep.detail["geodesy"]["umbilicity_L"] = gr.umbilicity_L;
    }
    if (m.cr_c) {
      double v = cr_curvature_check(m.chart, d1, d2, *m.cr_c, plan, tol);
      rep.add({"manifest", "cr-check", m.decompose->first + "+" + m.decompose->second,
               "", std::nullopt, v, "", std::nullopt, "INFO"});
      rep.detail["cr_check"]["c"] = *m.cr_c;
      rep.detail["cr_check"]["max_abs"] = v;
    }
  }
  return rep;
}

RunReport verify_paper(const std::vector<std::string>& ids, const Overrides& ov) {
  SamplingPlan plan;
  Tolerances tol;
  apply(ov, plan, tol);

  RunReport rep;
  rep.tool_version = kToolVersion;
  rep.source = "gallery";
  rep.detail["discrepancies"] = json::array();

  std::vector<std::string> run_ids = ids.empty() ? gallery_ids() : ids;
  for (const auto& id : run_ids) {
    GalleryEntry entry = load_example(id);
    for (const auto& kase : entry.cases) {
      const std::string label = case_label(kase);
      std::string reason;
      if (!case_admissible(entry, kase, &reason)) {
        rep.add({id, "verify", "case", label, std::nullopt, std::nullopt, reason,
                 std::nullopt, "SKIPPED"});
        continue;
      }
      ImmersionChart chart = entry.chart(kase);
      std::map<std::string, DistributionSpec> dists;
      for (const auto& [name, idx] : entry.distributions)
        dists.emplace(name, DistributionSpec::coordinate(name, idx, chart));

      std::map<std::string, SlantReport> cache;
      auto classify_for = [&](const std::string& subj) -> const SlantReport& {
        auto it = cache.find(subj);
        if (it != cache.end()) return it->second;
        std::optional<DistributionSpec> d;
        if (subj != "TM") d = dists.at(subj);
        return cache.emplace(subj, classify_slant(chart, d, plan, tol)).first->second;
      };
      std::optional<BiSlantReport> bis;
      auto decompose_once = [&]() -> const BiSlantReport& {
        if (!bis)
          bis = decompose_bislant(chart, dists.at("D1"), dists.at("D2"), plan, tol);
        return *bis;
      };

      for (const auto& eo : expected_claims(entry, kase)) {
        ReportRow row{id, eo.kind, eo.subject, label, std::nullopt,
                      std::nullopt, "", std::nullopt, ""};
        bool match = false;
        std::string computed;
        const SlantReport* sr = nullptr;

        if (eo.kind == "lambda-formula") {
          const SlantReport& r = classify_for(eo.subject);
          sr = &r;
          row.lambda = r.lambda;
          row.residual = std::fabs(r.lambda - *eo.lambda);
          row.type = slant_type_name(r.type);
          row.theta = r.theta;
          computed = format_double(r.lambda);
          match = *row.residual <= 1e-6 && r.lambda_spread <= 1e-6;
        } else if (eo.kind == "type-label") {
          const SlantReport& r = classify_for(eo.subject);
          sr = &r;
          row.lambda = r.lambda;
          row.residual = r.residual;
          row.type = slant_type_name(r.type);
          row.theta = r.theta;
          computed = row.type;
          if (eo.label == "unspecified") {
            row.outcome = "UNSPECIFIED";
            rep.add(row);
            continue;
          }
          match = (computed == eo.label);
        } else if (eo.kind == "decomposition-label") {
          const BiSlantReport& b = decompose_once();
          row.type = b.label;
          computed = b.label;
          match = (computed == eo.label);
        } else if (eo.kind == "p-invariance") {
          double v = check_P_invariance(chart, dists.at(eo.subject), plan, tol);
          row.residual = v;
          computed = format_double(v);
          match = v <= 1e-10;
        } else if (eo.kind == "not-slant") {
          const SlantReport& r = classify_for("TM");
          sr = &r;
          row.lambda = r.lambda;
          row.residual = r.residual;
          row.type = slant_type_name(r.type);
          computed = row.type;
          match = (r.type == SlantType::NonSlant);
        } else {
          throw InputError("unknown claim kind '" + eo.kind + "'");
        }

        const bool strict = eo.strict || ov.strict;
        row.outcome = match ? "PASS" : (strict ? "FAIL" : "DISCREPANCY");
        if (!match) {
          json d;
          d["entry"] = id;
          d["case"] = label;
          d["kind"] = eo.kind;
          d["subject"] = eo.subject;
          d["source"] = eo.source;
          d["claimed"] = eo.lambda ? json(*eo.lambda) : json(eo.label);
          d["computed"] = computed;
          if (sr) d["samples"] = samples_json(*sr);
          rep.detail["discrepancies"].push_back(d);
        }
        rep.add(row);
      }
    }
  }
  return rep;
}

int exit_code(const RunReport& report) { return report.fails > 0 ? 1 : 0; }

}  // namespace paraslant
