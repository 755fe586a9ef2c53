#include "paraslant/gallery.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace paraslant {

namespace {

using CaseMap = std::map<std::string, double>;
using Cond = std::pair<std::string, std::string>;

double eval_condition_expr(const std::string& text, const CaseMap& values) {
  std::set<std::string> declared;
  for (const auto& [k, v] : values) declared.insert(k);
  return eval_value(parse_expression(text, declared), values);
}

bool condition_holds(const Cond& c, const CaseMap& values) {
  double v = eval_condition_expr(c.first, values);
  if (c.second == ">0") return v > 1e-12;
  if (c.second == "<0") return v < -1e-12;
  if (c.second == "=0") return std::fabs(v) <= 1e-9;
  if (c.second == "!=0") return std::fabs(v) > 1e-9;
  throw InputError("unknown condition relation '" + c.second + "'");
}

CaseMap abcd(double a, double b, double c, double d) {
  return {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
}

const std::vector<std::pair<double, double>> kBox4 = {
    {-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}};

// Row-wise default assignments for a planar factor governed by the
// (J, g) block: lambda = a^2 / (1 + a^2 - b^2).
const std::vector<std::vector<std::pair<double, double>>> kJRows = {
    {{2, 2}, {1.5, 1.5}, {3, 3}, {1.2, 1.5}, {2, 1.8}},        // type 1
    {{1, 0.5}, {0.5, 0.5}, {2, 0.5}, {1.5, 0.8}, {1, 0}},      // type 2
    {{1, 2}, {0.5, 1.5}, {1, 1.5}, {2, 2.5}, {0.5, 2}},        // type 3
};

// Same for a factor governed by the (J1, g1) block, where the computed
// lambda is b^2 / (1 + b^2 - a^2).
const std::vector<std::vector<std::pair<double, double>>> kJ1Rows = {
    {{1.5, 2}, {2, 3}, {1.2, 2}, {2, 2.5}, {1.5, 2.5}},        // type 1
    {{0.5, 2}, {0.5, 1.5}, {0.8, 2}, {0.3, 1.5}, {0.6, 2.5}},  // type 2
    {{2, 1}, {1.5, 0.5}, {3, 1}, {2.5, 1.2}, {2, 0.5}},        // type 3
};

GalleryEntry aw_base() {
  GalleryEntry e;
  e.ambient = "J2-g2-R8";
  e.params = {"u1", "v1", "u2", "v2"};
  e.domain = kBox4;
  e.components = {"a*u1", "v1", "b*u1", "u1", "c*u2", "v2", "d*u2", "u2"};
  e.constant_names = {"a", "b", "c", "d"};
  e.admissibility = {{"a^2+b^2-1", "!=0"}, {"c^2+d^2-1", "!=0"}};
  e.distributions = {{"D1", {0, 1}}, {"D2", {2, 3}}};
  return e;
}

GalleryEntry make_aw1() {
  GalleryEntry e = aw_base();
  e.id = "aw1";
  const std::vector<std::vector<std::pair<double, double>>> rows = {
      {{2, 0}, {1.5, 0.5}, {2, 0.5}, {1.2, 0.8}, {3, 0}},          // type 1
      {{1, 2}, {0.5, 2}, {1, 1.5}, {2, 2}, {1.5, 1.2}},            // type 2
      {{0.5, 0.5}, {0.3, 0.4}, {0.6, 0.2}, {0.5, 0.3}, {0.2, 0.2}}};  // type 3
  for (const auto& row : rows)
    for (const auto& [a, b] : row) e.cases.push_back(abcd(a, b, a, b));

  Claim l1{"lambda-formula", "D1", true,
           "Example (aw): P^2_1 = a^2/(-1+a^2+b^2) Id_1", "a^2/(-1+a^2+b^2)",
           {}, {}, ""};
  Claim l2{"lambda-formula", "D2", true,
           "Example (aw): P^2_2 = c^2/(-1+c^2+d^2) Id_2", "c^2/(-1+c^2+d^2)",
           {}, {}, ""};
  Claim t1{"type-label", "D1", true, "Example (aw) type table, D1 column", "",
           {},
           {{{{"a^2+b^2-1", ">0"}, {"1-b^2", ">0"}}, "slant-1"},
            {{{"a^2+b^2-1", ">0"}, {"b^2-1", ">0"}}, "slant-2"},
            {{{"1-a^2-b^2", ">0"}}, "slant-3"}},
           ""};
  Claim t2{"type-label", "D2", true,
           "Example (aw) type table, D2 column (conditions transcribed with "
           "the roles of c and d matching the D1 column)",
           "",
           {},
           {{{{"c^2+d^2-1", ">0"}, {"1-d^2", ">0"}}, "slant-1"},
            {{{"c^2+d^2-1", ">0"}, {"d^2-1", ">0"}}, "slant-2"},
            {{{"1-c^2-d^2", ">0"}}, "slant-3"}},
           ""};
  Claim dec{"decomposition-label", "TM", true,
            "Example (aw): defines a bi-slant submanifold", "", {}, {},
            "bi-slant"};
  Claim p1{"p-invariance", "D1", true, "Prop: slant distributions are P invariant",
           "", {}, {}, ""};
  Claim p2{"p-invariance", "D2", true, "Prop: slant distributions are P invariant",
           "", {}, {}, ""};
  e.claims = {l1, l2, t1, t2, dec, p1, p2};
  return e;
}

GalleryEntry make_aw1_semi() {
  GalleryEntry e = aw_base();
  e.id = "aw1-semi";
  e.cases = {abcd(0, 2, 1, 2), abcd(0, 1.5, 1, 2), abcd(0, 2, 2, 2)};
  Claim dec{"decomposition-label", "TM", false,
            "Example (aw): Taking a=0 ... we obtain a semi-slant submanifold",
            "", {}, {}, "semi-slant"};
  Claim l2{"lambda-formula", "D2", true,
           "Example (aw): P^2_2 = c^2/(-1+c^2+d^2) Id_2", "c^2/(-1+c^2+d^2)",
           {}, {}, ""};
  Claim t1{"type-label", "D1", true, "a=0 kills P on D1 (computed)", "", {}, {},
           "totally-real"};
  e.claims = {dec, l2, t1};
  return e;
}

GalleryEntry make_aw1_hemi() {
  GalleryEntry e = aw_base();
  e.id = "aw1-hemi";
  e.cases = {abcd(2, 1, 1, 2), abcd(1.5, 1, 1, 2), abcd(2, 1, 2, 2)};
  Claim dec{"decomposition-label", "TM", false,
            "Example (aw): taking b=1 we obtain a hemi-slant submanifold", "",
            {}, {}, "hemi-slant"};
  Claim l2{"lambda-formula", "D2", true,
           "Example (aw): P^2_2 = c^2/(-1+c^2+d^2) Id_2", "c^2/(-1+c^2+d^2)",
           {}, {}, ""};
  e.claims = {dec, l2};
  return e;
}

GalleryEntry comancheria_base(const std::string& ambient) {
  GalleryEntry e;
  e.ambient = ambient;
  e.params = {"u1", "v1", "u2", "v2"};
  e.domain = kBox4;
  e.components = {"u1", "a*v1", "b*v1", "v1", "u2", "c*v2", "d*v2", "v2"};
  e.constant_names = {"a", "b", "c", "d"};
  e.distributions = {{"D1", {0, 1}}, {"D2", {2, 3}}};
  return e;
}

// Printed type rows for a (J, g)-block factor; correct as printed.
std::vector<ClaimRow> j_rows(const std::string& x, const std::string& y) {
  // x plays the role of a, y of b; lambda = x^2/(1+x^2-y^2)
  return {{{{"1+" + x + "^2-" + y + "^2", ">0"}, {y + "^2-1", ">0"}}, "slant-1"},
          {{{"1+" + x + "^2-" + y + "^2", ">0"}, {"1-" + y + "^2", ">0"}}, "slant-2"},
          {{{y + "^2-" + x + "^2-1", ">0"}}, "slant-3"}};
}

// Type rows for a (J1, g1)-block factor. Types 1 and 2 are as printed;
// the printed type-3 condition (y^2 - x^2 < 1) is wider than the region
// where lambda = y^2/(1+y^2-x^2) is actually negative, so the row is
// narrowed to x^2 - y^2 > 1 (with y != 0).
std::vector<ClaimRow> j1_rows(const std::string& x, const std::string& y) {
  return {{{{y + "^2-" + x + "^2-1", ">0"}, {x + "^2-1", ">0"}}, "slant-1"},
          {{{y + "^2-" + x + "^2-1", ">0"}, {"1-" + x + "^2", ">0"}}, "slant-2"},
          {{{x + "^2-" + y + "^2-1", ">0"}, {y + "^2", "!=0"}}, "slant-3"}};
}

Claim lambda_claim(const std::string& subject, const std::string& x,
                   const std::string& y, bool strict) {
  Claim c{"lambda-formula", subject, strict,
          "Example table: P^2 = " + x + "^2/(1+" + x + "^2-" + y + "^2) Id",
          x + "^2/(1+" + x + "^2-" + y + "^2)", {}, {}, ""};
  return c;
}

GalleryEntry make_comancheria(const std::string& id) {
  bool d1_j1 = (id != "comancheria-J2");   // J3, J4: first block is (J1, g1)
  bool d2_j1 = (id == "comancheria-J4");   // J4: second block too
  GalleryEntry e = comancheria_base(id == "comancheria-J2"   ? "J2-g2-R8"
                                    : id == "comancheria-J3" ? "J3-g3-R8"
                                                             : "J4-g4-R8");
  e.id = id;
  e.admissibility = {
      {d1_j1 ? "a^2-b^2-1" : "b^2-a^2-1", "!=0"},
      {d2_j1 ? "c^2-d^2-1" : "d^2-c^2-1", "!=0"}};
  const auto& rows1 = d1_j1 ? kJ1Rows : kJRows;
  const auto& rows2 = d2_j1 ? kJ1Rows : kJRows;
  for (size_t r = 0; r < 3; ++r)
    for (size_t i = 0; i < rows1[r].size(); ++i)
      e.cases.push_back(abcd(rows1[r][i].first, rows1[r][i].second,
                             rows2[r][i].first, rows2[r][i].second));

  // Printed lambda formulas are a^2/(1+a^2-b^2) and c^2/(1+c^2-d^2) for
  // every ambient; for (J1, g1)-block factors the computed value is
  // b^2/(1+b^2-a^2) instead, so those claims are recorded, not asserted.
  Claim l1 = lambda_claim("D1", "a", "b", !d1_j1);
  Claim l2 = lambda_claim("D2", "c", "d", !d2_j1);
  Claim t1{"type-label", "D1", true, "Example table, D1 column", "", {},
           d1_j1 ? j1_rows("a", "b") : j_rows("a", "b"), ""};
  Claim t2{"type-label", "D2", true, "Example table, D2 column", "", {},
           d2_j1 ? j1_rows("c", "d") : j_rows("c", "d"), ""};
  Claim dec{"decomposition-label", "TM", true, "defines a bi-slant submanifold",
            "", {}, {}, "bi-slant"};
  Claim p1{"p-invariance", "D1", true, "Prop: slant distributions are P invariant",
           "", {}, {}, ""};
  Claim p2{"p-invariance", "D2", true, "Prop: slant distributions are P invariant",
           "", {}, {}, ""};
  e.claims = {l1, l2, t1, t2, dec, p1, p2};
  return e;
}

GalleryEntry make_diecisiete() {
  GalleryEntry e;
  e.id = "diecisiete";
  e.ambient = "J5-g5-R6";
  e.params = {"u", "v", "w"};
  e.domain = {{-2, 2}, {0.1, 1.2}, {-2, 2}};
  e.components = {"u", "k*cosh(v)", "v", "k*sinh(v)", "w", "0"};
  e.constant_names = {"k"};
  e.cases = {{{"k", 2.0}}, {{"k", 1.5}}};
  e.admissibility = {{"k^2-1", ">0"}};
  e.distributions = {{"D1", {2}}, {"D2", {0, 1}}};
  Claim l2{"lambda-formula", "D2", false,
           "Example (R^6): P_2^2 = 1/(k^2-1) Id restricted to D_2",
           "1/(k^2-1)", {}, {}, ""};
  Claim t2{"type-label", "D2", false, "Example (R^6): a type 3 slant distribution",
           "", {}, {}, "slant-3"};
  Claim t1{"type-label", "D1", true, "Example (R^6): a totally real distribution",
           "", {}, {}, "totally-real"};
  e.claims = {l2, t2, t1};
  return e;
}

GalleryEntry make_final_half_half() {
  GalleryEntry e;
  e.id = "final-half-half";
  e.ambient = "J2-g2-R8";
  e.params = {"u1", "v1", "u2", "v2"};
  e.domain = kBox4;
  e.components = {"u1", "v1+u2", "u1",         "u1",
                  "u2", "v2",    "sqrt(3)*u2", "u2-v1"};
  e.cases = {{}};
  e.distributions = {{"D1", {0, 1}}, {"D2", {2, 3}}};
  Claim l1{"lambda-formula", "D1", true, "final Example: P^2_1 = 1/2 Id_1",
           "1/2", {}, {}, ""};
  Claim l2{"lambda-formula", "D2", true, "final Example: P^2_2 = 1/2 Id_2",
           "1/2", {}, {}, ""};
  Claim ns{"not-slant", "TM", true, "final Example: It is not a slant submanifold",
           "", {}, {}, ""};
  Claim dec{"decomposition-label", "TM", true,
            "final Example: is a bi-slant submanifold", "", {}, {}, "bi-slant"};
  e.claims = {l1, l2, ns, dec};
  return e;
}

GalleryEntry make_cr_family() {
  GalleryEntry e = aw_base();
  e.id = "cr-family";
  e.cases = {abcd(1, 2, 2, 0), abcd(1, 0.5, 0.5, 0), abcd(0, 2, 2, 1)};
  std::vector<Cond> a1d0 = {{"a-1", "=0"}, {"d", "=0"}};
  std::vector<Cond> a0d1 = {{"a", "=0"}, {"d-1", "=0"}};
  Claim tr{"type-label", "D1", false,
           "CR section: Taking a=1, d=0, D_1 is a totally real distribution",
           "", a1d0, {}, "totally-real"};
  Claim hol{"type-label", "D2", false,
            "CR section: D_2 is an holomorphic distribution", "", a1d0, {},
            "para-complex"};
  Claim cr1{"decomposition-label", "TM", false,
            "CR section: examples of CR-submanifolds (a=1, d=0)", "", a1d0, {},
            "CR"};
  Claim cr2{"decomposition-label", "TM", false,
            "CR section: Taking a=0, d=1 we can obtain ... examples", "", a0d1,
            {}, "CR"};
  Claim t1{"type-label", "D1", false, "CR section items 1-2", "", a1d0,
           {{{{"1-b^2", ">0"}}, "slant-1"}, {{{"b^2-1", ">0"}}, "slant-2"}},
           ""};
  Claim t2{"type-label", "D2", false, "CR section items 3-4", "", a1d0,
           {{{{"c^2-1", ">0"}}, "slant-2"}, {{{"1-c^2", ">0"}}, "slant-3"}},
           ""};
  e.claims = {tr, hol, cr1, cr2, t1, t2};
  return e;
}

}  // namespace

ImmersionChart GalleryEntry::chart(const CaseMap& constants) const {
  CaseMap consts;
  for (const auto& name : constant_names) {
    auto it = constants.find(name);
    if (it == constants.end())
      throw InputError("gallery case missing constant '" + name + "'");
    consts[name] = it->second;
  }
  return ImmersionChart::make(gallery_structure(ambient), params, domain, consts,
                              components);
}

std::vector<std::string> gallery_ids() {
  return {"aw1",        "aw1-semi",       "aw1-hemi",
          "comancheria-J2", "comancheria-J3", "comancheria-J4",
          "diecisiete", "final-half-half", "cr-family"};
}

GalleryEntry load_example(const std::string& id) {
  if (id == "aw1") return make_aw1();
  if (id == "aw1-semi") return make_aw1_semi();
  if (id == "aw1-hemi") return make_aw1_hemi();
  if (id == "comancheria-J2" || id == "comancheria-J3" || id == "comancheria-J4")
    return make_comancheria(id);
  if (id == "diecisiete") return make_diecisiete();
  if (id == "final-half-half") return make_final_half_half();
  if (id == "cr-family") return make_cr_family();
  std::ostringstream os;
  os << "unknown gallery id '" << id << "'; valid:";
  for (const auto& n : gallery_ids()) os << " " << n;
  throw InputError(os.str());
}

bool case_admissible(const GalleryEntry& entry, const CaseMap& constants,
                     std::string* reason) {
  for (const auto& cond : entry.admissibility) {
    if (!condition_holds(cond, constants)) {
      if (reason) *reason = "admissibility violated: " + cond.first + " " + cond.second;
      return false;
    }
  }
  return true;
}

std::vector<ExpectedOutcome> expected_claims(const GalleryEntry& entry,
                                             const CaseMap& constants) {
  std::vector<ExpectedOutcome> out;
  for (const auto& claim : entry.claims) {
    bool applies = true;
    for (const auto& cond : claim.conditions)
      if (!condition_holds(cond, constants)) {
        applies = false;
        break;
      }
    if (!applies) continue;

    ExpectedOutcome eo;
    eo.kind = claim.kind;
    eo.subject = claim.subject;
    eo.strict = claim.strict;
    eo.source = claim.source;
    if (claim.kind == "lambda-formula") {
      std::set<std::string> declared;
      for (const auto& [k, v] : constants) declared.insert(k);
      eo.lambda = eval_value(parse_expression(claim.formula, declared), constants);
    } else if (claim.kind == "type-label" && !claim.rows.empty()) {
      eo.label = "unspecified";
      for (const auto& row : claim.rows) {
        bool all = true;
        for (const auto& cond : row.conditions)
          if (!condition_holds(cond, constants)) {
            all = false;
            break;
          }
        if (all) {
          eo.label = row.label;
          break;
        }
      }
    } else {
      eo.label = claim.label;
    }
    out.push_back(std::move(eo));
  }
  return out;
}

}  // namespace paraslant
