#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "hnlie/scalar.hpp"

namespace hnlie {

using Bindings = std::map<std::string, Scalar>;

/// Immutable arithmetic expression over integer literals, identifiers,
/// sqrt(...), unary minus and + - * /.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | primary
///   primary := integer | identifier | 'sqrt' '(' expr ')' | '(' expr ')'
class Expression {
 public:
  enum class Kind { Number, Symbol, Sqrt, Negate, Add, Subtract, Multiply, Divide };

  struct Node {
    Kind kind;
    Integer number;
    std::string symbol;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expression();
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  /// Throws Error(SyntaxError) with the 1-based line and column of the fault.
  /// `column` is the column of text[0] within its source line.
  static Expression parse(std::string_view text, int line = 1, int column = 1);

  static Expression number(long value);
  static Expression symbol(std::string name);
  Expression negated() const;

  const Node& root() const { return *root_; }

  /// Canonical text; parse(str()) is structurally equal to *this.
  std::string str() const;

  std::set<std::string> symbols() const;

  /// Throws Error(UnboundParameter) for identifiers missing from `bindings`.
  Scalar evaluate(const Bindings& bindings = {}) const;

  friend bool operator==(const Expression& x, const Expression& y);
  friend bool operator!=(const Expression& x, const Expression& y) { return !(x == y); }

 private:
  std::shared_ptr<const Node> root_;
};

/// Parses and evaluates a closed scalar literal such as "(-3+2*sqrt(2))/6".
Scalar parse_scalar(std::string_view text);

}  // namespace hnlie
