#include <doctest.h>

#include <random>

#include "paraslant/ambient.hpp"

using namespace paraslant;

namespace {

double structure_residual(const AmbientStructure& s) {
  Mat jj = matmul(s.J, s.J);
  double r = 0.0;
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      double id = i == j ? 1.0 : 0.0;
      r = std::max(r, std::fabs(jj(i, j) - id));
    }
  Mat anti = matmul(transpose(s.J), s.g);
  Mat gj = matmul(s.g, s.J);
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j)
      r = std::max(r, std::fabs(anti(i, j) + gj(i, j)));
  return r;
}

}  // namespace

TEST_CASE("gallery structures satisfy the axioms exactly") {
  auto names = gallery_structure_names();
  REQUIRE(names.size() == 6);
  for (const auto& name : names) {
    AmbientStructure s = gallery_structure(name);
    CAPTURE(name);
    CHECK(validate_structure(s).empty());
    CHECK(structure_residual(s) == 0.0);
    CHECK(s.dim % 2 == 0);
    auto [pos, neg] = signature(s.g);
    CHECK(pos == s.dim / 2);  // neutral signature (n, n)
    CHECK(neg == s.dim / 2);
  }
}

TEST_CASE("unknown structure name is rejected") {
  CHECK_THROWS_AS(gallery_structure("no-such-structure"), InputError);
}

TEST_CASE("identity J violates anti-compatibility") {
  AmbientStructure s = gallery_structure("J-g-R4");
  s.J = identity(4);
  auto v = validate_structure(s);
  REQUIRE(!v.empty());
  bool anti = false;
  for (const auto& viol : v) {
    if (viol.axiom.find("J'g") != std::string::npos ||
        viol.axiom.find("anti") != std::string::npos)
      anti = true;
    CHECK(viol.residual > 0.0);
  }
  CHECK(anti);
}

TEST_CASE("J^2 = I is checked") {
  AmbientStructure s = gallery_structure("J-g-R4");
  s.J(0, 1) = 0.5;  // breaks J^2 = I
  CHECK(!validate_structure(s).empty());
}

TEST_CASE("degenerate metric is rejected") {
  AmbientStructure s = gallery_structure("J-g-R4");
  for (int j = 0; j < 4; ++j) s.g(0, j) = 0.0;
  for (int i = 0; i < 4; ++i) s.g(i, 0) = 0.0;
  auto v = validate_structure(s);
  CHECK(!v.empty());
}

TEST_CASE("g reverses norms under J") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (const auto& name : gallery_structure_names()) {
    AmbientStructure s = gallery_structure(name);
    for (int trial = 0; trial < 8; ++trial) {
      Vec x(static_cast<size_t>(s.dim));
      for (auto& c : x) c = dist(rng);
      Vec jx = matvec(s.J, x);
      CHECK(form(jx, s.g, jx) == doctest::Approx(-form(x, s.g, x)).epsilon(1e-12));
      // and g(JX, Y) = -g(X, JY)
      Vec y(static_cast<size_t>(s.dim));
      for (auto& c : y) c = dist(rng);
      CHECK(form(jx, s.g, y) == doctest::Approx(-form(x, s.g, matvec(s.J, y))).epsilon(1e-12));
    }
  }
}
