#include "hnlie/expression.hpp"

#include <cctype>
#include <functional>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Expression::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  return std::make_shared<const Node>(Node{kind, Integer(0), {}, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  Parser(std::string_view text, int line, int column)
      : text_(text), line_(line), column_(column) {}

  NodePtr parse() {
    NodePtr out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_) + ", column " +
                                            std::to_string(column_ + static_cast<int>(pos_)) +
                                            ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Kind::Subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Kind::Multiply, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Kind::Divide, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::Negate, unary());
    if (accept('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      auto node = std::make_shared<Node>(Node{Kind::Number, Integer(0), {}, nullptr, nullptr});
      node->number = Integer(std::string(text_.substr(start, pos_ - start)));
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "sqrt") {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(Kind::Sqrt, arg);
      }
      auto node = std::make_shared<Node>(Node{Kind::Symbol, Integer(0), {}, nullptr, nullptr});
      node->symbol = std::move(name);
      return node;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

int precedence(Kind kind) {
  switch (kind) {
    case Kind::Add:
    case Kind::Subtract: return 1;
    case Kind::Multiply:
    case Kind::Divide: return 2;
    case Kind::Negate: return 3;
    default: return 4;
  }
}

std::string render(const Node& node) {
  // Operands are parenthesized whenever re-parsing could regroup them.
  auto wrap = [](const Node& child, bool paren) {
    return paren ? "(" + render(child) + ")" : render(child);
  };
  switch (node.kind) {
    case Kind::Number: return node.number.get_str();
    case Kind::Symbol: return node.symbol;
    case Kind::Sqrt: return "sqrt(" + render(*node.lhs) + ")";
    case Kind::Negate: return "-" + wrap(*node.lhs, precedence(node.lhs->kind) < 4);
    default: break;
  }
  const int p = precedence(node.kind);
  const char op = node.kind == Kind::Add        ? '+'
                  : node.kind == Kind::Subtract ? '-'
                  : node.kind == Kind::Multiply ? '*'
                                                : '/';
  const bool left_paren = precedence(node.lhs->kind) < p;
  const bool right_paren = precedence(node.rhs->kind) <= p || node.rhs->kind == Kind::Negate;
  return wrap(*node.lhs, left_paren) + op + wrap(*node.rhs, right_paren);
}

bool same(const Node& x, const Node& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::Number: return x.number == y.number;
    case Kind::Symbol: return x.symbol == y.symbol;
    case Kind::Sqrt:
    case Kind::Negate: return same(*x.lhs, *y.lhs);
    default: return same(*x.lhs, *y.lhs) && same(*x.rhs, *y.rhs);
  }
}

void collect(const Node& node, std::set<std::string>& out) {
  if (node.kind == Kind::Symbol) out.insert(node.symbol);
  if (node.lhs) collect(*node.lhs, out);
  if (node.rhs) collect(*node.rhs, out);
}

Scalar eval(const Node& node, const Bindings& bindings) {
  switch (node.kind) {
    case Kind::Number: return Scalar(Rational(node.number));
    case Kind::Symbol: {
      auto it = bindings.find(node.symbol);
      if (it == bindings.end()) {
        throw Error(ErrorCode::UnboundParameter, "unbound symbol '" + node.symbol + "'");
      }
      return it->second;
    }
    case Kind::Sqrt: {
      const Scalar arg = eval(*node.lhs, bindings);
      if (!arg.is_rational()) {
        throw Error(ErrorCode::NonRationalRadicand, "sqrt of irrational " + arg.to_string());
      }
      return Scalar::sqrt(arg.rational_part());
    }
    case Kind::Negate: return -eval(*node.lhs, bindings);
    case Kind::Add: return eval(*node.lhs, bindings) + eval(*node.rhs, bindings);
    case Kind::Subtract: return eval(*node.lhs, bindings) - eval(*node.rhs, bindings);
    case Kind::Multiply: return eval(*node.lhs, bindings) * eval(*node.rhs, bindings);
    case Kind::Divide: return eval(*node.lhs, bindings) / eval(*node.rhs, bindings);
  }
  return {};
}

}  // namespace

Expression::Expression() : Expression(number(0)) {}

Expression Expression::parse(std::string_view text, int line, int column) {
  return Expression(Parser(text, line, column).parse());
}

Expression Expression::number(long value) {
  if (value < 0) return number(-value).negated();
  auto node = std::make_shared<Node>(Node{Kind::Number, Integer(value), {}, nullptr, nullptr});
  return Expression(node);
}

Expression Expression::symbol(std::string name) {
  auto node = std::make_shared<Node>(Node{Kind::Symbol, Integer(0), std::move(name), nullptr, nullptr});
  return Expression(node);
}

Expression Expression::negated() const { return Expression(make(Kind::Negate, root_)); }

std::string Expression::str() const { return render(*root_); }

std::set<std::string> Expression::symbols() const {
  std::set<std::string> out;
  collect(*root_, out);
  return out;
}

Scalar Expression::evaluate(const Bindings& bindings) const { return eval(*root_, bindings); }

bool operator==(const Expression& x, const Expression& y) { return same(*x.root_, *y.root_); }

Scalar parse_scalar(std::string_view text) { return Expression::parse(text).evaluate(); }

}  // namespace hnlie
