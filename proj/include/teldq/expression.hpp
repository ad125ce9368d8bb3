#pragma once

#include <memory>
#include <string>

namespace teldq {

/// Compiled closed-form expression in the variables x, y, t.
///
/// Grammar: numbers, x, y, t, pi, + - * / ^ with usual precedence, unary
/// sign, parentheses, and the functions sin, cos, sinh, cosh, exp, log.
/// parse_expression throws std::invalid_argument with the offending
/// position on malformed input.
class Expression {
 public:
  struct Node;  // defined in the implementation

  double eval(double x, double y, double t) const;
  const std::string& text() const { return text_; }

 private:
  friend Expression parse_expression(const std::string& text);
  std::shared_ptr<const Node> root_;
  std::string text_;
};

Expression parse_expression(const std::string& text);

}  // namespace teldq
