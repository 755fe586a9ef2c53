#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "paraslant/errors.hpp"
#include "paraslant/jet.hpp"

namespace paraslant {

// Parse failure with the byte offset of the offending token.
struct ParseError {
  size_t offset = 0;
  std::string expected;
  std::string found;
};

class ExprParseError : public std::runtime_error {
 public:
  explicit ExprParseError(ParseError e);
  const ParseError& detail() const { return err_; }

 private:
  ParseError err_;
};

enum class UnaryOp { Neg, Cosh, Sinh, Cos, Sin, Exp, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div };

// Immutable expression tree for immersion components and vector-field
// coefficients. `pi` is predefined; every other identifier must be in the
// declared-name set handed to parse().
class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    enum class Kind { Literal, Name, Unary, Binary, Pow } kind;
    double literal = 0.0;
    std::string name;
    UnaryOp uop = UnaryOp::Neg;
    BinaryOp bop = BinaryOp::Add;
    int exponent = 0;
    NodePtr lhs, rhs;
    size_t offset = 0;  // source position, for error reporting
  };

  Expr() = default;
  explicit Expr(NodePtr root) : root_(std::move(root)) {}
  const NodePtr& root() const { return root_; }
  bool valid() const { return root_ != nullptr; }

 private:
  NodePtr root_;
};

// Recursive-descent parse with standard precedence (unary minus binds
// tighter than '^'; '^' takes integer literal exponents only; no implicit
// multiplication). Unknown identifiers are rejected here, not at eval.
Expr parse_expression(std::string_view text, const std::set<std::string>& declared);

// Fully parenthesised round-trippable rendering.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// Order-3 jet of the expression in the declared variables (in order) at
// the given point; constants contribute no derivatives.
Jet3 eval_jet(const Expr& e, const std::vector<std::string>& variables,
              const std::map<std::string, double>& variable_values,
              const std::map<std::string, double>& constant_values);

// Plain value evaluation, used for claim formulas and conditions.
double eval_value(const Expr& e, const std::map<std::string, double>& values);

}  // namespace paraslant
