#pragma once

/**
 * @file expr.hpp
 * @brief One-variable real expressions: parsing, evaluation, symbolic
 * differentiation.
 *
 * Grammar (highest precedence last):
 * @code
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := ('-' | '+') unary | power
 *   power   := primary ('^' unary)?          // right-associative
 *   primary := number | 'pi' | 'e' | identifier
 *            | func '(' expr ')' | '(' expr ')'
 *   func    := sin | cos | exp | ln | sqrt | abs
 * @endcode
 *
 * The first identifier that is not a constant or a function name binds the
 * free variable; a second, different identifier is a parse error. Trees are
 * immutable and can be shared freely between threads.
 *
 * @code
 * auto f = gcfrac::ExprTree::parse("x^2 + sin(x)");
 * double y = f.evaluate(1.0);
 * double dy = f.derivative().evaluate(1.0);   // 2x + cos(x)
 * @endcode
 */

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "gcfrac/errors.hpp"

namespace gcfrac {

enum class UnaryOp { Neg, Sin, Cos, Exp, Ln, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct ExprNode {
  enum class Kind { Constant, Variable, Unary, Binary };

  Kind kind = Kind::Constant;
  double value = 0.0;
  UnaryOp unary = UnaryOp::Neg;
  BinaryOp binary = BinaryOp::Add;
  std::shared_ptr<const ExprNode> lhs;  // operand of a unary node
  std::shared_ptr<const ExprNode> rhs;
};

using NodePtr = std::shared_ptr<const ExprNode>;

class ExprTree {
 public:
  /// The constant 0 over the variable `x`.
  ExprTree();

  /// Throws ParseError with a byte offset on malformed input.
  static ExprTree parse(std::string_view text);

  static ExprTree constant(double value);
  static ExprTree variable(std::string name = "x");

  /// Throws DomainError outside the real domain; never returns NaN or inf.
  double evaluate(double x) const;
  double operator()(double x) const { return evaluate(x); }

  /// Exact symbolic derivative with respect to the free variable. Only
  /// constant folding and neutral-element elision are applied.
  ExprTree derivative() const;

  /// Fully parenthesised text that parses back to an equivalent tree.
  std::string to_string() const;

  const std::string& variable_name() const noexcept { return variable_; }
  /// Original text for parsed trees, otherwise the printed form.
  const std::string& source() const noexcept { return source_; }
  const NodePtr& root() const noexcept { return root_; }

  bool has_variable() const noexcept;
  std::size_t depth() const noexcept;
  std::size_t node_count() const noexcept;

  /// Same tree, relabelled free variable (affects printing only).
  ExprTree with_variable(std::string name) const;

  friend ExprTree operator+(const ExprTree& a, const ExprTree& b);
  friend ExprTree operator-(const ExprTree& a, const ExprTree& b);
  friend ExprTree operator*(const ExprTree& a, const ExprTree& b);
  friend ExprTree operator/(const ExprTree& a, const ExprTree& b);
  friend ExprTree operator-(const ExprTree& a);
  friend ExprTree pow(const ExprTree& base, const ExprTree& exponent);
  friend ExprTree apply(UnaryOp op, const ExprTree& arg);

  /// outer(inner(x)); the result uses inner's variable name.
  friend ExprTree compose(const ExprTree& outer, const ExprTree& inner);

 private:
  ExprTree(NodePtr root, std::string variable, std::string source);
  static ExprTree from_node(NodePtr root, std::string variable);

  NodePtr root_;
  std::string variable_;
  std::string source_;
};

ExprTree operator+(const ExprTree& a, const ExprTree& b);
ExprTree operator-(const ExprTree& a, const ExprTree& b);
ExprTree operator*(const ExprTree& a, const ExprTree& b);
ExprTree operator/(const ExprTree& a, const ExprTree& b);
ExprTree operator-(const ExprTree& a);
ExprTree pow(const ExprTree& base, const ExprTree& exponent);
ExprTree apply(UnaryOp op, const ExprTree& arg);
ExprTree compose(const ExprTree& outer, const ExprTree& inner);

std::string_view to_string(UnaryOp op) noexcept;

/// An expression paired with its symbolic derivative, computed once.
/// This is the form in which f, g and k are consumed by the numerical code.
class ScalarFunction {
 public:
  ScalarFunction() : ScalarFunction(ExprTree::constant(0.0)) {}
  explicit ScalarFunction(ExprTree expr);

  static ScalarFunction parse(std::string_view text) {
    return ScalarFunction(ExprTree::parse(text));
  }

  double value(double x) const { return expr_.evaluate(x); }
  double slope(double x) const { return derivative_.evaluate(x); }
  double operator()(double x) const { return value(x); }

  const ExprTree& expr() const noexcept { return expr_; }
  const ExprTree& derivative_expr() const noexcept { return derivative_; }
  const std::string& source() const noexcept { return expr_.source(); }

 private:
  ExprTree expr_;
  ExprTree derivative_;
};

}  // namespace gcfrac
