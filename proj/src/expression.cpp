#include "teldq/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace teldq {

struct Expression::Node {
  enum class Op { constant, var_x, var_y, var_t, add, sub, mul, div, pow, neg, call };
  Op op = Op::constant;
  double value = 0.0;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double x, double y, double t) const {
    switch (op) {
      case Op::constant: return value;
      case Op::var_x: return x;
      case Op::var_y: return y;
      case Op::var_t: return t;
      case Op::add: return lhs->eval(x, y, t) + rhs->eval(x, y, t);
      case Op::sub: return lhs->eval(x, y, t) - rhs->eval(x, y, t);
      case Op::mul: return lhs->eval(x, y, t) * rhs->eval(x, y, t);
      case Op::div: return lhs->eval(x, y, t) / rhs->eval(x, y, t);
      case Op::pow: return std::pow(lhs->eval(x, y, t), rhs->eval(x, y, t));
      case Op::neg: return -lhs->eval(x, y, t);
      case Op::call: return fn(lhs->eval(x, y, t));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make_binary(Node::Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos_) + ": " + what + " in \"" +
                                text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr expr() {
    auto lhs = term();
    while (true) {
      if (consume('+')) {
        lhs = make_binary(Node::Op::add, lhs, term());
      } else if (consume('-')) {
        lhs = make_binary(Node::Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    auto lhs = unary();
    while (true) {
      if (consume('*')) {
        lhs = make_binary(Node::Op::mul, lhs, unary());
      } else if (consume('/')) {
        lhs = make_binary(Node::Op::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) {
      auto n = std::make_shared<Node>();
      n->op = Node::Op::neg;
      n->lhs = unary();
      return n;
    }
    consume('+');
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (consume('^')) {
      // right associative; the exponent may carry its own sign
      return make_binary(Node::Op::pow, base, unary());
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a value");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (consume('(')) {
      auto e = expr();
      if (!consume(')')) fail("missing ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* start = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) fail("malformed number");
    pos_ += static_cast<size_t>(end - start);
    auto n = std::make_shared<Node>();
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);

    auto leaf = [](Node::Op op) {
      auto n = std::make_shared<Node>();
      n->op = op;
      return NodePtr(n);
    };
    if (name == "x") return leaf(Node::Op::var_x);
    if (name == "y") return leaf(Node::Op::var_y);
    if (name == "t") return leaf(Node::Op::var_t);
    if (name == "pi") {
      auto n = std::make_shared<Node>();
      n->value = std::numbers::pi;
      return n;
    }

    static const std::pair<const char*, double (*)(double)> functions[] = {
        {"sin", [](double v) { return std::sin(v); }},
        {"cos", [](double v) { return std::cos(v); }},
        {"sinh", [](double v) { return std::sinh(v); }},
        {"cosh", [](double v) { return std::cosh(v); }},
        {"exp", [](double v) { return std::exp(v); }},
        {"log", [](double v) { return std::log(v); }},
    };
    for (const auto& [fname, fp] : functions) {
      if (name == fname) {
        if (!consume('(')) fail("expected '(' after " + name);
        auto arg = expr();
        if (!consume(')')) fail("missing ')' after argument of " + name);
        auto n = std::make_shared<Node>();
        n->op = Node::Op::call;
        n->fn = fp;
        n->lhs = std::move(arg);
        return n;
      }
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

double Expression::eval(double x, double y, double t) const {
  return root_->eval(x, y, t);
}

Expression parse_expression(const std::string& text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = text;
  return e;
}

}  // namespace teldq
