#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "paraslant/expr.hpp"

using namespace paraslant;

namespace {

double value_of(const std::string& text, const std::map<std::string, double>& vals) {
  std::set<std::string> names;
  for (const auto& [k, v] : vals) names.insert(k);
  return eval_value(parse_expression(text, names), vals);
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(value_of("1 + 2*3", {}) == 7.0);
  CHECK(value_of("2 - 3 - 4", {}) == -5.0);
  CHECK(value_of("2*3^2", {}) == 18.0);
  CHECK(value_of("-2^2", {}) == 4.0);  // unary minus binds tighter than ^
  CHECK(value_of("(1+2)*3", {}) == 9.0);
  CHECK(value_of("8/4/2", {}) == 1.0);
  CHECK(value_of("cos(pi)", {}) == doctest::Approx(-1.0));
  CHECK(value_of("sqrt(3)*2", {}) == doctest::Approx(2.0 * std::sqrt(3.0)));
}

TEST_CASE("names must be declared, no implicit multiplication") {
  std::set<std::string> declared = {"a", "u1"};
  CHECK_NOTHROW(parse_expression("a*u1", declared));
  CHECK_THROWS_AS(parse_expression("au1", declared), ExprParseError);
  CHECK_THROWS_AS(parse_expression("2u1", declared), ExprParseError);
  CHECK_THROWS_AS(parse_expression("b*u1", declared), ExprParseError);
  try {
    parse_expression("a + q", declared);
    CHECK(false);
  } catch (const ExprParseError& e) {
    CHECK(e.detail().offset == 4);
  }
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_expression("1 + * 2", {});
    CHECK(false);
  } catch (const ExprParseError& e) {
    CHECK(e.detail().offset == 4);
  }
  CHECK_THROWS_AS(parse_expression("(1+2", {}), ExprParseError);
  CHECK_THROWS_AS(parse_expression("", {}), ExprParseError);
  CHECK_THROWS_AS(parse_expression("cosh(x", {"x"}), ExprParseError);
  // exponent must be an integer literal
  CHECK_THROWS_AS(parse_expression("x^x", {"x"}), ExprParseError);
  CHECK_THROWS_AS(parse_expression("x^1.5", {"x"}), ExprParseError);
}

TEST_CASE("print then reparse is structurally stable") {
  std::set<std::string> declared = {"a", "b", "u", "v", "k"};
  std::vector<std::string> cases = {
      "a*u - b*v",  "k*cosh(v)",        "sqrt(3)*u",   "-(u + v)^3",
      "u^2*v",      "sinh(a*v)/(1+u)",  "exp(u)-pi",   "cos(u)*sin(v) + 2",
  };
  for (const auto& text : cases) {
    Expr e = parse_expression(text, declared);
    std::string printed = to_string(e);
    Expr e2 = parse_expression(printed, declared);
    CHECK_MESSAGE(structurally_equal(e, e2), text, " -> ", printed);
    CHECK(to_string(e2) == printed);
  }
}

TEST_CASE("jet evaluation of u^2*v") {
  std::set<std::string> declared = {"u", "v"};
  Expr e = parse_expression("u^2*v", declared);
  Jet3 j = eval_jet(e, {"u", "v"}, {{"u", 1.0}, {"v", 2.0}}, {});
  CHECK(j.value() == 2.0);
  CHECK(j.grad(0) == 4.0);
  CHECK(j.grad(1) == 1.0);
  CHECK(j.hess(0, 0) == 4.0);
  CHECK(j.hess(0, 1) == 2.0);
  CHECK(j.third(0, 0, 1) == 2.0);
  CHECK(j.third(0, 0, 0) == 0.0);
}

TEST_CASE("constants contribute no derivatives") {
  std::set<std::string> declared = {"v", "k"};
  Expr e = parse_expression("k*cosh(v)", declared);
  Jet3 j = eval_jet(e, {"v"}, {{"v", 0.5}}, {{"k", 2.0}});
  CHECK(j.vars() == 1);
  CHECK(j.value() == doctest::Approx(2.0 * std::cosh(0.5)));
  CHECK(j.grad(0) == doctest::Approx(2.0 * std::sinh(0.5)));
  CHECK(j.hess(0, 0) == doctest::Approx(2.0 * std::cosh(0.5)));
}

TEST_CASE("eval_value needs every name bound") {
  std::set<std::string> declared = {"a"};
  Expr e = parse_expression("a + 1", declared);
  CHECK(eval_value(e, {{"a", 2.0}}) == 3.0);
  CHECK_THROWS_AS(eval_value(e, {}), InputError);
}

TEST_CASE("division by zero at evaluation") {
  std::set<std::string> declared = {"u"};
  Expr e = parse_expression("1/u", declared);
  CHECK_THROWS_AS(eval_jet(e, {"u"}, {{"u", 0.0}}, {}), JetError);
  CHECK(eval_jet(e, {"u"}, {{"u", 2.0}}, {}).value() == doctest::Approx(0.5));
}
