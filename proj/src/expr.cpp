#include "gcfrac/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

namespace gcfrac {

namespace {

NodePtr make_constant(double v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Constant;
  n->value = v;
  return n;
}

NodePtr make_variable() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Variable;
  return n;
}

bool is_constant(const NodePtr& n, double v) {
  return n->kind == ExprNode::Kind::Constant && n->value == v;
}

bool contains_variable(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Constant: return false;
    case ExprNode::Kind::Variable: return true;
    case ExprNode::Kind::Unary: return contains_variable(*n.lhs);
    case ExprNode::Kind::Binary: return contains_variable(*n.lhs) || contains_variable(*n.rhs);
  }
  return false;
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite result in ") + what);
  return v;
}

double apply_unary(UnaryOp op, double a) {
  switch (op) {
    case UnaryOp::Neg: return -a;
    case UnaryOp::Sin: return std::sin(a);
    case UnaryOp::Cos: return std::cos(a);
    case UnaryOp::Exp: return checked(std::exp(a), "exp");
    case UnaryOp::Ln:
      if (!(a > 0.0)) throw DomainError("ln of nonpositive value");
      return std::log(a);
    case UnaryOp::Sqrt:
      if (a < 0.0) throw DomainError("sqrt of negative value");
      return std::sqrt(a);
    case UnaryOp::Abs: return std::fabs(a);
  }
  return a;
}

double apply_binary(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return checked(a + b, "+");
    case BinaryOp::Sub: return checked(a - b, "-");
    case BinaryOp::Mul: return checked(a * b, "*");
    case BinaryOp::Div:
      if (b == 0.0) throw DomainError("division by zero");
      return checked(a / b, "/");
    case BinaryOp::Pow:
      if (a < 0.0 && std::floor(b) != b)
        throw DomainError("non-integer power of negative base");
      if (a == 0.0 && b < 0.0) throw DomainError("division by zero (0 to a negative power)");
      return checked(std::pow(a, b), "^");
  }
  return a;
}

double eval_node(const ExprNode& n, double x) {
  switch (n.kind) {
    case ExprNode::Kind::Constant: return n.value;
    case ExprNode::Kind::Variable: return x;
    case ExprNode::Kind::Unary: return apply_unary(n.unary, eval_node(*n.lhs, x));
    case ExprNode::Kind::Binary:
      return apply_binary(n.binary, eval_node(*n.lhs, x), eval_node(*n.rhs, x));
  }
  return 0.0;
}

// Builders fold constant subtrees and drop neutral elements. Anything that
// could change the domain of the expression (0*u, u^0) is kept as is.
NodePtr make_unary(UnaryOp op, NodePtr a) {
  if (a->kind == ExprNode::Kind::Constant) {
    try {
      return make_constant(apply_unary(op, a->value));
    } catch (const DomainError&) {
    }
  }
  if (op == UnaryOp::Neg && a->kind == ExprNode::Kind::Unary && a->unary == UnaryOp::Neg)
    return a->lhs;
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Unary;
  n->unary = op;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_binary(BinaryOp op, NodePtr a, NodePtr b) {
  if (a->kind == ExprNode::Kind::Constant && b->kind == ExprNode::Kind::Constant) {
    try {
      return make_constant(apply_binary(op, a->value, b->value));
    } catch (const DomainError&) {
    }
  }
  switch (op) {
    case BinaryOp::Add:
      if (is_constant(a, 0.0)) return b;
      if (is_constant(b, 0.0)) return a;
      break;
    case BinaryOp::Sub:
      if (is_constant(b, 0.0)) return a;
      if (is_constant(a, 0.0)) return make_unary(UnaryOp::Neg, std::move(b));
      break;
    case BinaryOp::Mul:
      if (is_constant(a, 1.0)) return b;
      if (is_constant(b, 1.0)) return a;
      break;
    case BinaryOp::Div:
    case BinaryOp::Pow:
      if (is_constant(b, 1.0)) return a;
      break;
  }
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Binary;
  n->binary = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr add(NodePtr a, NodePtr b) { return make_binary(BinaryOp::Add, std::move(a), std::move(b)); }
NodePtr sub(NodePtr a, NodePtr b) { return make_binary(BinaryOp::Sub, std::move(a), std::move(b)); }
NodePtr mul(NodePtr a, NodePtr b) { return make_binary(BinaryOp::Mul, std::move(a), std::move(b)); }
NodePtr div(NodePtr a, NodePtr b) { return make_binary(BinaryOp::Div, std::move(a), std::move(b)); }
NodePtr pw(NodePtr a, NodePtr b) { return make_binary(BinaryOp::Pow, std::move(a), std::move(b)); }
NodePtr un(UnaryOp op, NodePtr a) { return make_unary(op, std::move(a)); }

NodePtr differentiate(const NodePtr& n) {
  if (!contains_variable(*n)) return make_constant(0.0);
  switch (n->kind) {
    case ExprNode::Kind::Constant: return make_constant(0.0);
    case ExprNode::Kind::Variable: return make_constant(1.0);
    case ExprNode::Kind::Unary: {
      const NodePtr& u = n->lhs;
      NodePtr du = differentiate(u);
      switch (n->unary) {
        case UnaryOp::Neg: return un(UnaryOp::Neg, du);
        case UnaryOp::Sin: return mul(un(UnaryOp::Cos, u), du);
        case UnaryOp::Cos: return mul(un(UnaryOp::Neg, un(UnaryOp::Sin, u)), du);
        case UnaryOp::Exp: return mul(n, du);
        case UnaryOp::Ln: return div(du, u);
        case UnaryOp::Sqrt: return div(du, mul(make_constant(2.0), n));
        case UnaryOp::Abs: return mul(div(u, n), du);  // sign(u), undefined at 0
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      const NodePtr& u = n->lhs;
      const NodePtr& v = n->rhs;
      switch (n->binary) {
        case BinaryOp::Add: return add(differentiate(u), differentiate(v));
        case BinaryOp::Sub: return sub(differentiate(u), differentiate(v));
        case BinaryOp::Mul:
          if (!contains_variable(*u)) return mul(u, differentiate(v));
          if (!contains_variable(*v)) return mul(differentiate(u), v);
          return add(mul(differentiate(u), v), mul(u, differentiate(v)));
        case BinaryOp::Div:
          if (!contains_variable(*v)) return div(differentiate(u), v);
          return div(sub(mul(differentiate(u), v), mul(u, differentiate(v))), mul(v, v));
        case BinaryOp::Pow:
          if (!contains_variable(*v)) {
            // c * u^(c-1) * u'
            return mul(mul(v, pw(u, sub(v, make_constant(1.0)))), differentiate(u));
          }
          if (!contains_variable(*u)) {
            // u^v * ln(u) * v'
            return mul(mul(n, un(UnaryOp::Ln, u)), differentiate(v));
          }
          // u^v * (v' ln u + v u' / u)
          return mul(n, add(mul(differentiate(v), un(UnaryOp::Ln, u)),
                            div(mul(v, differentiate(u)), u)));
      }
      break;
    }
  }
  return make_constant(0.0);
}

NodePtr substitute(const NodePtr& n, const NodePtr& replacement) {
  switch (n->kind) {
    case ExprNode::Kind::Constant: return n;
    case ExprNode::Kind::Variable: return replacement;
    case ExprNode::Kind::Unary: return make_unary(n->unary, substitute(n->lhs, replacement));
    case ExprNode::Kind::Binary:
      return make_binary(n->binary, substitute(n->lhs, replacement),
                         substitute(n->rhs, replacement));
  }
  return n;
}

std::size_t node_depth(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Constant:
    case ExprNode::Kind::Variable: return 1;
    case ExprNode::Kind::Unary: return 1 + node_depth(*n.lhs);
    case ExprNode::Kind::Binary: return 1 + std::max(node_depth(*n.lhs), node_depth(*n.rhs));
  }
  return 1;
}

std::size_t count_nodes(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::Constant:
    case ExprNode::Kind::Variable: return 1;
    case ExprNode::Kind::Unary: return 1 + count_nodes(*n.lhs);
    case ExprNode::Kind::Binary: return 1 + count_nodes(*n.lhs) + count_nodes(*n.rhs);
  }
  return 1;
}

void print_node(const ExprNode& n, const std::string& var, std::string& out) {
  switch (n.kind) {
    case ExprNode::Kind::Constant: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      if (n.value < 0.0 || std::signbit(n.value)) {
        out += "(";
        out += buf;
        out += ")";
      } else {
        out += buf;
      }
      return;
    }
    case ExprNode::Kind::Variable: out += var; return;
    case ExprNode::Kind::Unary:
      if (n.unary == UnaryOp::Neg) {
        out += "(-";
        print_node(*n.lhs, var, out);
        out += ")";
      } else {
        out += to_string(n.unary);
        out += "(";
        print_node(*n.lhs, var, out);
        out += ")";
      }
      return;
    case ExprNode::Kind::Binary: {
      static constexpr char ops[] = {'+', '-', '*', '/', '^'};
      out += "(";
      print_node(*n.lhs, var, out);
      out += ' ';
      out += ops[static_cast<int>(n.binary)];
      out += ' ';
      print_node(*n.rhs, var, out);
      out += ")";
      return;
    }
  }
}

// Recursive-descent parser over the raw bytes; there is no separate token
// stream because the grammar needs one character of lookahead at most.
class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::pair<NodePtr, std::string> run() {
    skip_ws();
    if (pos_ == src_.size()) fail(pos_, "empty expression", "operand");
    NodePtr root = expr();
    skip_ws();
    if (pos_ < src_.size()) {
      if (src_[pos_] == ')') fail(pos_, "unbalanced ')'", "end of input");
      fail(pos_, std::string("unexpected token '") + src_[pos_] + "'", "operator or end of input");
    }
    return {root, var_};
  }

 private:
  [[noreturn]] void fail(std::size_t at, std::string msg, std::string expected = {}) const {
    throw ParseError(ParseDiagnostic{std::min(at, src_.size()), std::move(msg), std::move(expected)},
                     std::string(src_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = add(lhs, term());
      else if (accept('-')) lhs = sub(lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = mul(lhs, unary());
      else if (accept('/')) lhs = div(lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return un(UnaryOp::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return pw(base, unary());
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ == src_.size()) fail(pos_, "expected operand", "number, variable, function or '('");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '(') {
      const std::size_t open = pos_++;
      NodePtr inner = expr();
      if (!accept(')')) {
        skip_ws();
        if (pos_ == src_.size()) fail(pos_, "unbalanced '(' opened at offset " + std::to_string(open), "')'");
        fail(pos_, std::string("unexpected token '") + src_[pos_] + "'", "')'");
      }
      return inner;
    }
    if (c == ')') fail(pos_, "expected operand", "number, variable, function or '('");
    if (c == '+' || c == '*' || c == '/' || c == '^')
      fail(pos_, "expected operand", "number, variable, function or '('");
    fail(pos_, std::string("unknown token '") + c + "'", "number, variable, function or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) fail(start, "unknown token '.'", "number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    const double v = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(v)) fail(start, "numeric literal out of range");
    return make_constant(v);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    static constexpr std::pair<std::string_view, UnaryOp> functions[] = {
        {"sin", UnaryOp::Sin}, {"cos", UnaryOp::Cos},   {"exp", UnaryOp::Exp},
        {"ln", UnaryOp::Ln},   {"sqrt", UnaryOp::Sqrt}, {"abs", UnaryOp::Abs}};
    for (const auto& [fname, op] : functions) {
      if (name == fname) {
        if (!accept('(')) fail(pos_, "function '" + name + "' requires an argument", "'('");
        const std::size_t open = pos_ - 1;
        NodePtr arg = expr();
        if (!accept(')')) {
          skip_ws();
          if (pos_ == src_.size()) fail(pos_, "unbalanced '(' opened at offset " + std::to_string(open), "')'");
          fail(pos_, std::string("unexpected token '") + src_[pos_] + "'", "')'");
        }
        return un(op, arg);
      }
    }
    if (name == "pi") return make_constant(std::numbers::pi);
    if (name == "e") return make_constant(std::numbers::e);

    if (var_.empty()) {
      var_ = name;
    } else if (var_ != name) {
      fail(start, "second free variable '" + name + "' (expression already uses '" + var_ + "')",
           "'" + var_ + "'");
    }
    return make_variable();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::string var_;
};

}  // namespace

std::string_view to_string(UnaryOp op) noexcept {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Abs: return "abs";
  }
  return "?";
}

ExprTree::ExprTree() : ExprTree(make_constant(0.0), "x", "0") {}

ExprTree::ExprTree(NodePtr root, std::string variable, std::string source)
    : root_(std::move(root)), variable_(std::move(variable)), source_(std::move(source)) {}

ExprTree ExprTree::from_node(NodePtr root, std::string variable) {
  ExprTree t(std::move(root), std::move(variable), {});
  t.source_ = t.to_string();
  return t;
}

ExprTree ExprTree::parse(std::string_view text) {
  auto [root, var] = Parser(text).run();
  if (var.empty()) var = "x";
  return ExprTree(std::move(root), std::move(var), std::string(text));
}

ExprTree ExprTree::constant(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite constant");
  return from_node(make_constant(value), "x");
}

ExprTree ExprTree::variable(std::string name) {
  return ExprTree(make_variable(), name, name);
}

double ExprTree::evaluate(double x) const { return eval_node(*root_, x); }

ExprTree ExprTree::derivative() const { return from_node(differentiate(root_), variable_); }

std::string ExprTree::to_string() const {
  std::string out;
  print_node(*root_, variable_, out);
  return out;
}

bool ExprTree::has_variable() const noexcept { return contains_variable(*root_); }
std::size_t ExprTree::depth() const noexcept { return node_depth(*root_); }
std::size_t ExprTree::node_count() const noexcept { return count_nodes(*root_); }

ExprTree ExprTree::with_variable(std::string name) const {
  ExprTree t(root_, std::move(name), {});
  t.source_ = t.to_string();
  return t;
}

namespace {
const std::string& pick_variable(const ExprTree& a, const ExprTree& b) {
  return a.has_variable() || !b.has_variable() ? a.variable_name() : b.variable_name();
}
}  // namespace

ExprTree operator+(const ExprTree& a, const ExprTree& b) {
  return ExprTree::from_node(add(a.root_, b.root_), pick_variable(a, b));
}
ExprTree operator-(const ExprTree& a, const ExprTree& b) {
  return ExprTree::from_node(sub(a.root_, b.root_), pick_variable(a, b));
}
ExprTree operator*(const ExprTree& a, const ExprTree& b) {
  return ExprTree::from_node(mul(a.root_, b.root_), pick_variable(a, b));
}
ExprTree operator/(const ExprTree& a, const ExprTree& b) {
  return ExprTree::from_node(div(a.root_, b.root_), pick_variable(a, b));
}
ExprTree operator-(const ExprTree& a) {
  return ExprTree::from_node(un(UnaryOp::Neg, a.root_), a.variable_);
}
ExprTree pow(const ExprTree& base, const ExprTree& exponent) {
  return ExprTree::from_node(pw(base.root_, exponent.root_), pick_variable(base, exponent));
}
ExprTree apply(UnaryOp op, const ExprTree& arg) {
  return ExprTree::from_node(un(op, arg.root_), arg.variable_);
}
ExprTree compose(const ExprTree& outer, const ExprTree& inner) {
  return ExprTree::from_node(substitute(outer.root_, inner.root_), inner.variable_);
}

ScalarFunction::ScalarFunction(ExprTree expr)
    : expr_(std::move(expr)), derivative_(expr_.derivative()) {}

}  // namespace gcfrac
