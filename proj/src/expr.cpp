#include "paraslant/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <functional>

namespace paraslant {

namespace {

std::string describe(const ParseError& e) {
  std::ostringstream os;
  os << "parse error at offset " << e.offset << ": expected " << e.expected
     << ", found " << (e.found.empty() ? "end of input" : "'" + e.found + "'");
  return os.str();
}

struct Parser {
  std::string_view text;
  const std::set<std::string>& declared;
  size_t pos = 0;

  [[noreturn]] void fail(size_t at, std::string expected, std::string found) {
    throw ExprParseError(ParseError{at, std::move(expected), std::move(found)});
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Expr::NodePtr make(Expr::Node n) { return std::make_shared<Expr::Node>(std::move(n)); }

  Expr::NodePtr parse_expr() {
    auto lhs = parse_term();
    while (true) {
      skip_ws();
      if (eat('+')) {
        auto rhs = parse_term();
        lhs = make({Expr::Node::Kind::Binary, 0, "", UnaryOp::Neg, BinaryOp::Add, 0, lhs, rhs, pos});
      } else if (eat('-')) {
        auto rhs = parse_term();
        lhs = make({Expr::Node::Kind::Binary, 0, "", UnaryOp::Neg, BinaryOp::Sub, 0, lhs, rhs, pos});
      } else {
        return lhs;
      }
    }
  }

  Expr::NodePtr parse_term() {
    auto lhs = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        auto rhs = parse_factor();
        lhs = make({Expr::Node::Kind::Binary, 0, "", UnaryOp::Neg, BinaryOp::Mul, 0, lhs, rhs, pos});
      } else if (eat('/')) {
        auto rhs = parse_factor();
        lhs = make({Expr::Node::Kind::Binary, 0, "", UnaryOp::Neg, BinaryOp::Div, 0, lhs, rhs, pos});
      } else {
        return lhs;
      }
    }
  }

  // Unary minus binds tighter than '^': "-x^2" is "(-x)^2".
  Expr::NodePtr parse_factor() { return parse_power(); }

  Expr::NodePtr parse_unary() {
    skip_ws();
    if (eat('-')) {
      auto inner = parse_unary();
      return make({Expr::Node::Kind::Unary, 0, "", UnaryOp::Neg, BinaryOp::Add, 0, inner, nullptr, pos});
    }
    return parse_atom();
  }

  Expr::NodePtr parse_power() {
    auto base = parse_unary();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t at = pos;
      bool neg = false;
      if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start)
        fail(at, "integer exponent", pos < text.size() ? std::string(1, text[pos]) : "");
      int e = std::atoi(std::string(text.substr(start, pos - start)).c_str());
      if (neg) e = -e;
      return make({Expr::Node::Kind::Pow, 0, "", UnaryOp::Neg, BinaryOp::Add, e, base, nullptr, at});
    }
    return base;
  }

  Expr::NodePtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail(pos, "number, name, or '('", "");
    size_t at = pos;
    char c = text[pos];
    if (c == '(') {
      ++pos;
      auto inner = parse_expr();
      if (!eat(')'))
        fail(pos, "')'", pos < text.size() ? std::string(1, text[pos]) : "");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail(at, "number, name, or '('", std::string(1, c));
  }

  Expr::NodePtr parse_number() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      size_t save = pos;
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      } else {
        pos = save;
      }
    }
    double v = std::strtod(std::string(text.substr(start, pos - start)).c_str(), nullptr);
    return make({Expr::Node::Kind::Literal, v, "", UnaryOp::Neg, BinaryOp::Add, 0, nullptr, nullptr, start});
  }

  Expr::NodePtr parse_name() {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      UnaryOp op;
      if (name == "cosh") op = UnaryOp::Cosh;
      else if (name == "sinh") op = UnaryOp::Sinh;
      else if (name == "cos") op = UnaryOp::Cos;
      else if (name == "sin") op = UnaryOp::Sin;
      else if (name == "exp") op = UnaryOp::Exp;
      else if (name == "sqrt") op = UnaryOp::Sqrt;
      else fail(start, "known function (cosh, sinh, cos, sin, exp, sqrt)", name);
      ++pos;
      auto arg = parse_expr();
      if (!eat(')'))
        fail(pos, "')'", pos < text.size() ? std::string(1, text[pos]) : "");
      return make({Expr::Node::Kind::Unary, 0, "", op, BinaryOp::Add, 0, arg, nullptr, start});
    }
    if (name != "pi" && declared.find(name) == declared.end())
      fail(start, "declared name", name);
    return make({Expr::Node::Kind::Name, 0, name, UnaryOp::Neg, BinaryOp::Add, 0, nullptr, nullptr, start});
  }
};

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Cosh: return "cosh";
    case UnaryOp::Sinh: return "sinh";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Sqrt: return "sqrt";
  }
  return "?";
}

void print_node(const Expr::NodePtr& n, std::ostringstream& os) {
  using Kind = Expr::Node::Kind;
  switch (n->kind) {
    case Kind::Literal: {
      std::ostringstream v;
      v.precision(17);
      v << n->literal;
      os << v.str();
      break;
    }
    case Kind::Name:
      os << n->name;
      break;
    case Kind::Unary:
      if (n->uop == UnaryOp::Neg) {
        os << "(-";
        print_node(n->lhs, os);
        os << ")";
      } else {
        os << unary_name(n->uop) << "(";
        print_node(n->lhs, os);
        os << ")";
      }
      break;
    case Kind::Binary: {
      const char* op = n->bop == BinaryOp::Add   ? "+"
                       : n->bop == BinaryOp::Sub ? "-"
                       : n->bop == BinaryOp::Mul ? "*"
                                                 : "/";
      os << "(";
      print_node(n->lhs, os);
      os << op;
      print_node(n->rhs, os);
      os << ")";
      break;
    }
    case Kind::Pow:
      os << "(";
      print_node(n->lhs, os);
      os << "^" << n->exponent << ")";
      break;
  }
}

Jet3 eval_node(const Expr::NodePtr& n, const std::vector<std::string>& variables,
               const std::map<std::string, double>& vv,
               const std::map<std::string, double>& cv) {
  const int m = static_cast<int>(variables.size());
  using Kind = Expr::Node::Kind;
  switch (n->kind) {
    case Kind::Literal:
      return Jet3::constant(n->literal, m);
    case Kind::Name: {
      for (int i = 0; i < m; ++i)
        if (variables[i] == n->name) {
          auto it = vv.find(n->name);
          if (it == vv.end()) throw InputError("unbound variable " + n->name);
          return Jet3::variable(i, it->second, m);
        }
      if (n->name == "pi" && cv.find("pi") == cv.end())
        return Jet3::constant(M_PI, m);
      auto it = cv.find(n->name);
      if (it == cv.end()) throw InputError("unbound constant " + n->name);
      return Jet3::constant(it->second, m);
    }
    case Kind::Unary: {
      Jet3 a = eval_node(n->lhs, variables, vv, cv);
      try {
        switch (n->uop) {
          case UnaryOp::Neg: return -a;
          case UnaryOp::Cosh: return cosh(a);
          case UnaryOp::Sinh: return sinh(a);
          case UnaryOp::Cos: return cos(a);
          case UnaryOp::Sin: return sin(a);
          case UnaryOp::Exp: return exp(a);
          case UnaryOp::Sqrt: return sqrt(a);
        }
      } catch (const JetError& e) {
        throw JetError(std::string(e.what()) + " at offset " + std::to_string(n->offset));
      }
      throw InputError("unreachable unary op");
    }
    case Kind::Binary: {
      Jet3 a = eval_node(n->lhs, variables, vv, cv);
      Jet3 b = eval_node(n->rhs, variables, vv, cv);
      try {
        switch (n->bop) {
          case BinaryOp::Add: return a + b;
          case BinaryOp::Sub: return a - b;
          case BinaryOp::Mul: return a * b;
          case BinaryOp::Div: return a / b;
        }
      } catch (const JetError& e) {
        throw JetError(std::string(e.what()) + " at offset " + std::to_string(n->offset));
      }
      throw InputError("unreachable binary op");
    }
    case Kind::Pow: {
      Jet3 a = eval_node(n->lhs, variables, vv, cv);
      try {
        return ipow(a, n->exponent);
      } catch (const JetError& e) {
        throw JetError(std::string(e.what()) + " at offset " + std::to_string(n->offset));
      }
    }
  }
  throw InputError("unreachable node kind");
}

}  // namespace

ExprParseError::ExprParseError(ParseError e)
    : std::runtime_error(describe(e)), err_(std::move(e)) {}

Expr parse_expression(std::string_view text, const std::set<std::string>& declared) {
  if (text.empty()) throw ExprParseError(ParseError{0, "nonempty expression", ""});
  Parser p{text, declared};
  auto root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ExprParseError(
        ParseError{p.pos, "end of input", std::string(1, text[p.pos])});
  return Expr(root);
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_node(e.root(), os);
  return os.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
  std::function<bool(const Expr::NodePtr&, const Expr::NodePtr&)> eq =
      [&](const Expr::NodePtr& x, const Expr::NodePtr& y) -> bool {
    if (!x || !y) return x == y;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Expr::Node::Kind::Literal: return x->literal == y->literal;
      case Expr::Node::Kind::Name: return x->name == y->name;
      case Expr::Node::Kind::Unary: return x->uop == y->uop && eq(x->lhs, y->lhs);
      case Expr::Node::Kind::Binary:
        return x->bop == y->bop && eq(x->lhs, y->lhs) && eq(x->rhs, y->rhs);
      case Expr::Node::Kind::Pow:
        return x->exponent == y->exponent && eq(x->lhs, y->lhs);
    }
    return false;
  };
  return eq(a.root(), b.root());
}

Jet3 eval_jet(const Expr& e, const std::vector<std::string>& variables,
              const std::map<std::string, double>& variable_values,
              const std::map<std::string, double>& constant_values) {
  if (!e.valid()) throw InputError("eval_jet: empty expression");
  return eval_node(e.root(), variables, variable_values, constant_values);
}

double eval_value(const Expr& e, const std::map<std::string, double>& values) {
  return eval_jet(e, {}, {}, values).value();
}

}  // namespace paraslant
