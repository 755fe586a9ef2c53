#include <doctest.h>

#include <cmath>

#include "paraslant/slant.hpp"

using namespace paraslant;

namespace {

ImmersionChart product_chart(double a, double b, double c, double d) {
  return ImmersionChart::make(
      gallery_structure("J2-g2-R8"), {"u1", "v1", "u2", "v2"},
      {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}},
      {{"a", a}, {"b", b}, {"c", c}, {"d", d}},
      {"a*u1", "v1", "b*u1", "u1", "c*u2", "v2", "d*u2", "u2"});
}

double product_lambda(double a, double b) { return a * a / (a * a + b * b - 1.0); }

}  // namespace

TEST_CASE("estimate_lambda on explicit matrices") {
  Mat zero = zeros(2, 2);
  auto [l0, r0] = estimate_lambda(zero);
  CHECK(l0 == 0.0);
  CHECK(r0 == 0.0);

  Mat nil = zeros(2, 2);  // nilpotent: P^2 = 0 but P != 0
  nil(0, 1) = 1.0;
  auto [l1, r1] = estimate_lambda(nil);
  CHECK(l1 == 0.0);
  CHECK(r1 == 0.0);

  Mat half = zeros(2, 2);  // P^2 = 1/2 I off the diagonal
  half(0, 1) = 0.5;
  half(1, 0) = 1.0;
  auto [l2, r2] = estimate_lambda(half);
  CHECK(l2 == doctest::Approx(0.5));
  CHECK(r2 <= 1e-15);

  Mat mixed = zeros(2, 2);  // P^2 = diag(1, 4): not slant
  mixed(0, 0) = 1.0;
  mixed(1, 1) = 2.0;
  auto [l3, r3] = estimate_lambda(mixed);
  CHECK(l3 == doctest::Approx(2.5));
  CHECK(r3 == doctest::Approx(1.5));
}

TEST_CASE("restriction of P to the full tangent bundle is P") {
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  PointFrame f = evaluate_frame(chart, {0.2, 0.4, -0.3, 0.7});
  Mat B = identity(4);
  Mat pd = restrict_P_to_distribution(f, B);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(pd(i, j) == doctest::Approx(f.P(i, j)).epsilon(1e-12));
}

TEST_CASE("classification of the product-chart factors") {
  SamplingPlan plan;
  plan.count = 32;
  plan.seed = 1;

  struct Case {
    double a, b;
    SlantType expect;
  } cases[] = {
      {1, 2, SlantType::Slant2},
      {2, 0, SlantType::Slant1},
      {0.5, 0.5, SlantType::Slant3},
      {0, 2, SlantType::TotallyReal},
  };
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    ImmersionChart chart = product_chart(c.a, c.b, 1, 2);
    DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
    SlantReport rep = classify_slant(chart, d1, plan);
    CHECK(rep.type == c.expect);
    if (c.expect != SlantType::TotallyReal) {
      CHECK(rep.lambda == doctest::Approx(product_lambda(c.a, c.b)).epsilon(1e-10));
      CHECK(rep.residual <= 1e-9);
      CHECK(rep.lambda_spread <= 1e-9);
      REQUIRE(rep.theta.has_value());
    }
    CHECK(static_cast<int>(rep.samples.size()) == plan.count);
  }

  // theta conventions: type 1 arccosh(sqrt(lambda)), type 2 arccos,
  // type 3 arcsinh(sqrt(-lambda))
  {
    ImmersionChart chart = product_chart(2, 0, 1, 2);
    DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
    SlantReport rep = classify_slant(chart, d1, plan);
    double lam = product_lambda(2, 0);  // 4/3 > 1
    CHECK(*rep.theta == doctest::Approx(std::acosh(std::sqrt(lam))));
  }
  {
    ImmersionChart chart = product_chart(1, 2, 1, 2);
    DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
    SlantReport rep = classify_slant(chart, d1, plan);
    CHECK(*rep.theta == doctest::Approx(std::acos(std::sqrt(0.25))));
  }
  {
    ImmersionChart chart = product_chart(0.5, 0.5, 1, 2);
    DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
    SlantReport rep = classify_slant(chart, d1, plan);
    CHECK(rep.lambda == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(*rep.theta == doctest::Approx(std::asinh(std::sqrt(0.5))));
  }
}

TEST_CASE("para-complex factor versus boundary window") {
  SamplingPlan plan;
  plan.count = 16;

  // a=2, b=1: lambda = 4/4 = 1 but F only vanishes in the g-norm (the
  // normal parts are null), so the type stays on the boundary
  ImmersionChart chart = product_chart(2, 1, 1, 2);
  DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
  SlantReport rep = classify_slant(chart, d1, plan);
  CHECK(rep.lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.type == SlantType::Boundary);

  // genuinely J-invariant factor: plane times slant factor
  ImmersionChart mixed = ImmersionChart::make(
      gallery_structure("J2-g2-R8"), {"u1", "v1", "u2", "v2"},
      {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}}, {{"c", 1.0}, {"d", 2.0}},
      {"u1", "v1", "0", "0", "c*u2", "v2", "d*u2", "u2"});
  DistributionSpec m1 = DistributionSpec::coordinate("D1", {0, 1}, mixed);
  SlantReport mrep = classify_slant(mixed, m1, plan);
  CHECK(mrep.lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mrep.type == SlantType::ParaComplex);
}

TEST_CASE("whole tangent bundle with distinct factor angles is not slant") {
  SamplingPlan plan;
  plan.count = 16;
  ImmersionChart chart = product_chart(1, 2, 2, 0);
  SlantReport rep = classify_slant(chart, std::nullopt, plan);
  CHECK(rep.type == SlantType::NonSlant);
  CHECK(rep.residual > 0.1);
}

TEST_CASE("swapped pairing is anti-invariant, not totally real geometry") {
  // D~1 = span{d_u1, d_v2}: P maps it into the complementary pairing, so
  // the restriction of P to D~1 vanishes even though P X != 0.
  SamplingPlan plan;
  plan.count = 16;
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  DistributionSpec dswap = DistributionSpec::coordinate("Dswap", {0, 3}, chart);
  SlantReport rep = classify_slant(chart, dswap, plan);
  CHECK(rep.type == SlantType::AntiInvariant);
  CHECK(std::fabs(rep.lambda) <= 1e-12);
  CHECK(check_P_invariance(chart, dswap, plan) > 0.1);
}

TEST_CASE("coordinate factors are P-invariant") {
  SamplingPlan plan;
  plan.count = 16;
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
  DistributionSpec d2 = DistributionSpec::coordinate("D2", {2, 3}, chart);
  CHECK(check_P_invariance(chart, d1, plan) <= 1e-10);
  CHECK(check_P_invariance(chart, d2, plan) <= 1e-10);
}

TEST_CASE("bi-slant decomposition labels") {
  SamplingPlan plan;
  plan.count = 16;
  ImmersionChart chart = product_chart(1, 2, 2, 0);
  DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
  DistributionSpec d2 = DistributionSpec::coordinate("D2", {2, 3}, chart);
  BiSlantReport rep = decompose_bislant(chart, d1, d2, plan);
  CHECK(rep.orthogonal);
  CHECK(rep.spanning);
  CHECK(rep.label == "bi-slant");

  // a totally real factor demotes the pair to hemi-slant
  ImmersionChart hemi = product_chart(0, 2, 1, 2);
  DistributionSpec h1 = DistributionSpec::coordinate("D1", {0, 1}, hemi);
  DistributionSpec h2 = DistributionSpec::coordinate("D2", {2, 3}, hemi);
  BiSlantReport hrep = decompose_bislant(hemi, h1, h2, plan);
  CHECK(hrep.report1.type == SlantType::TotallyReal);
  CHECK(hrep.label == "hemi-slant");

  // a para-complex factor next to a proper slant factor: semi-slant
  ImmersionChart semi = ImmersionChart::make(
      gallery_structure("J2-g2-R8"), {"u1", "v1", "u2", "v2"},
      {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}}, {{"c", 1.0}, {"d", 2.0}},
      {"u1", "v1", "0", "0", "c*u2", "v2", "d*u2", "u2"});
  DistributionSpec s1 = DistributionSpec::coordinate("D1", {0, 1}, semi);
  DistributionSpec s2 = DistributionSpec::coordinate("D2", {2, 3}, semi);
  BiSlantReport srep = decompose_bislant(semi, s1, s2, plan);
  CHECK(srep.report1.type == SlantType::ParaComplex);
  CHECK(srep.label == "semi-slant");

  // para-complex plus totally real: CR
  ImmersionChart cr = ImmersionChart::make(
      gallery_structure("J2-g2-R8"), {"u1", "v1", "u2", "v2"},
      {{-2, 2}, {-2, 2}, {-2, 2}, {-2, 2}}, {{"d", 2.0}},
      {"u1", "v1", "0", "0", "0", "v2", "d*u2", "u2"});
  DistributionSpec c1 = DistributionSpec::coordinate("D1", {0, 1}, cr);
  DistributionSpec c2 = DistributionSpec::coordinate("D2", {2, 3}, cr);
  BiSlantReport crep = decompose_bislant(cr, c1, c2, plan);
  CHECK(crep.report1.type == SlantType::ParaComplex);
  CHECK(crep.report2.type == SlantType::TotallyReal);
  CHECK(crep.label == "CR");

  // non-spanning pair is invalid with a witness
  DistributionSpec dup = DistributionSpec::coordinate("D2", {0, 1}, chart);
  BiSlantReport bad = decompose_bislant(chart, d1, dup, plan);
  CHECK(bad.label == "invalid");
  CHECK(!bad.witness.empty());
}

TEST_CASE("maximal distributions at a point") {
  // plane x = (u, v, 0, 0): everything is holomorphic, nothing totally real
  ImmersionChart plane = ImmersionChart::make(
      gallery_structure("J-g-R4"), {"u", "v"}, {{-2, 2}, {-2, 2}}, {},
      {"u", "v", "0", "0"});
  PointFrame pf = evaluate_frame(plane, {0.3, 0.1});
  auto [dhol, dreal] = maximal_distributions(pf);
  CHECK(dhol.cols() == 2);
  CHECK(dreal.cols() == 0);

  // a = 0 product chart: first factor is totally real
  ImmersionChart chart = product_chart(0, 2, 1, 2);
  PointFrame f = evaluate_frame(chart, {0.1, 0.2, 0.3, 0.4});
  auto [hol2, real2] = maximal_distributions(f);
  CHECK(hol2.cols() == 0);
  CHECK(real2.cols() == 2);
  // the kernel of P contains the first coordinate plane
  for (int j = 0; j < real2.cols(); ++j) {
    Vec v = col(real2, j);
    CHECK(max_abs(matvec(f.P, v)) <= 1e-10);
  }
}

TEST_CASE("classification is invariant under parameter rescaling") {
  SamplingPlan plan;
  plan.count = 16;
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  ImmersionChart scaled = ImmersionChart::make(
      gallery_structure("J2-g2-R8"), {"u1", "v1", "u2", "v2"},
      {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}},
      {{"a", 1.0}, {"b", 2.0}, {"c", 1.0}, {"d", 2.0}},
      {"a*(2*u1)", "2*v1", "b*(2*u1)", "2*u1", "c*(2*u2)", "2*v2", "d*(2*u2)",
       "2*u2"});
  DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
  DistributionSpec s1 = DistributionSpec::coordinate("D1", {0, 1}, scaled);
  SlantReport r1 = classify_slant(chart, d1, plan);
  SlantReport r2 = classify_slant(scaled, s1, plan);
  CHECK(r1.type == r2.type);
  CHECK(r1.lambda == doctest::Approx(r2.lambda).epsilon(1e-10));
}

TEST_CASE("slant causal identity g(PX,PX) = -lambda g(X,X)") {
  SamplingPlan plan;
  plan.count = 8;
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  DistributionSpec d1 = DistributionSpec::coordinate("D1", {0, 1}, chart);
  double lam = product_lambda(1, 2);
  for (const auto& u : sample_points(chart, plan, Tolerances{})) {
    PointFrame f = evaluate_frame(chart, u);
    Mat B = distribution_matrix(d1, chart, u);
    Mat pd = restrict_P_to_distribution(f, B);
    Vec xc = {0.7, -0.4};
    Vec amb = matvec(f.E, matvec(B, xc));
    Vec pamb = matvec(f.E, matvec(B, matvec(pd, xc)));
    CHECK(form(pamb, f.gAmb, pamb) ==
          doctest::Approx(-lam * form(amb, f.gAmb, amb)).epsilon(1e-10));
  }
}

TEST_CASE("deterministic sampling and resampling failure") {
  SamplingPlan plan;
  plan.count = 16;
  plan.seed = 42;
  ImmersionChart chart = product_chart(1, 2, 1, 2);
  auto p1 = sample_points(chart, plan, Tolerances{});
  auto p2 = sample_points(chart, plan, Tolerances{});
  REQUIRE(p1.size() == p2.size());
  for (size_t i = 0; i < p1.size(); ++i)
    for (size_t j = 0; j < p1[i].size(); ++j) CHECK(p1[i][j] == p2[i][j]);

  plan.seed = 43;
  auto p3 = sample_points(chart, plan, Tolerances{});
  bool differs = false;
  for (size_t i = 0; i < p1.size() && !differs; ++i)
    if (p1[i][0] != p3[i][0]) differs = true;
  CHECK(differs);

  // every point of this chart has a degenerate induced metric
  ImmersionChart bad = ImmersionChart::make(
      gallery_structure("J-g-R4"), {"u"}, {{-2, 2}}, {}, {"u", "u", "0", "0"});
  CHECK_THROWS_WITH_AS(sample_points(bad, plan, Tolerances{}),
                       doctest::Contains("no-admissible-samples"), InputError);
}
