#include "hnlie/algebra.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hnlie/error.hpp"

namespace hnlie {

namespace {

using Kind = Expression::Kind;
using Node = Expression::Node;

[[noreturn]] void syntax(int line, int column, const std::string& message) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::optional<int> basis_index(std::string_view symbol) {
  if (symbol.size() < 2 || symbol[0] != 'e') return std::nullopt;
  int value = 0;
  for (char c : symbol.substr(1)) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 1000) return value;
  }
  return value;
}

/// Degree of an expression in the basis symbols: 0 for scalars, 1 for
/// vectors. Rejects anything that is not a linear combination of e1..e4.
int vector_degree(const Node& node, int line) {
  auto fail = [&](const std::string& message) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message);
  };
  switch (node.kind) {
    case Kind::Number: return 0;
    case Kind::Symbol: return basis_index(node.symbol) ? 1 : 0;
    case Kind::Sqrt:
      if (vector_degree(*node.lhs, line) != 0) fail("sqrt of a basis vector");
      return 0;
    case Kind::Negate: return vector_degree(*node.lhs, line);
    case Kind::Add:
    case Kind::Subtract: {
      const int l = vector_degree(*node.lhs, line);
      const int r = vector_degree(*node.rhs, line);
      if (l != r) fail("bracket value mixes scalars and basis vectors");
      return l;
    }
    case Kind::Multiply: {
      const int d = vector_degree(*node.lhs, line) + vector_degree(*node.rhs, line);
      if (d > 1) fail("product of basis vectors");
      return d;
    }
    case Kind::Divide:
      if (vector_degree(*node.rhs, line) != 0) fail("division by a basis vector");
      return vector_degree(*node.lhs, line);
  }
  return 0;
}

/// Coefficients of a linear combination of e1..e4 (degree already checked).
Vector linear_coefficients(const Node& node, const Bindings& bindings) {
  auto scalar = [&](const Node& n) { return Expression(std::make_shared<const Node>(n)).evaluate(bindings); };
  auto scaled = [](Vector v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
  };
  switch (node.kind) {
    case Kind::Symbol:
      if (auto idx = basis_index(node.symbol)) return basis_vector(*idx);
      break;
    case Kind::Negate: return scaled(linear_coefficients(*node.lhs, bindings), Scalar(-1));
    case Kind::Add:
    case Kind::Subtract: {
      Vector l = linear_coefficients(*node.lhs, bindings);
      const Vector r = linear_coefficients(*node.rhs, bindings);
      for (int k = 0; k < kDim; ++k) {
        if (node.kind == Kind::Add) {
          l[k] += r[k];
        } else {
          l[k] -= r[k];
        }
      }
      return l;
    }
    case Kind::Multiply: {
      // exactly one side carries the basis vector
      if (vector_degree(*node.lhs, 0) == 1) return scaled(linear_coefficients(*node.lhs, bindings), scalar(*node.rhs));
      return scaled(linear_coefficients(*node.rhs, bindings), scalar(*node.lhs));
    }
    case Kind::Divide:
      return scaled(linear_coefficients(*node.lhs, bindings), scalar(*node.rhs).inverse());
    default: break;
  }
  throw Error(ErrorCode::SyntaxError, "bracket value is not a linear combination of e1..e4");
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_')) return false;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  return s != "sqrt";
}

std::string parse_quoted(std::string_view rest, int line, int column) {
  const std::string t = trim(rest);
  if (t.size() < 2 || t.front() != '"' || t.back() != '"') syntax(line, column, "expected a quoted string");
  return t.substr(1, t.size() - 2);
}

struct LineCursor {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  }
  std::string word() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '_')) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) syntax(line, column(), std::string("expected '") + c + "'");
    ++pos;
  }
  bool at_end() {
    skip();
    return pos >= text.size();
  }
};

int parse_basis_ref(LineCursor& cur) {
  cur.skip();
  const int column = cur.column();
  const std::string w = cur.word();
  auto idx = basis_index(w);
  if (!idx) syntax(cur.line, column, "expected a basis vector e1..e4, got '" + w + "'");
  if (*idx < 1 || *idx > kDim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "line " + std::to_string(cur.line) + ", column " + std::to_string(column) +
                    ": basis index " + w + " outside e1..e4");
  }
  return *idx;
}

}  // namespace

// ---- parsing ----------------------------------------------------------

LieAlgebraSpec parse_algebra(std::string_view text) {
  LieAlgebraSpec spec;
  spec.name = "unnamed";
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, const BracketEntry*>> pending;  // line numbers for symbol checks
  std::vector<int> bracket_lines;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    LineCursor cur{raw, line_no};
    if (cur.at_end()) continue;
    const int kw_column = cur.column();
    const std::string keyword = cur.word();

    if (keyword == "name") {
      cur.expect('=');
      spec.name = parse_quoted(raw.substr(cur.pos), line_no, cur.column());
    } else if (keyword == "param") {
      cur.skip();
      const int column = cur.column();
      const std::string symbol = cur.word();
      if (!is_identifier(symbol) || basis_index(symbol)) syntax(line_no, column, "invalid parameter name '" + symbol + "'");
      for (const auto& p : spec.params)
        if (p.symbol == symbol) syntax(line_no, column, "parameter '" + symbol + "' declared twice");
      Parameter param{symbol, std::nullopt, {}};
      if (!cur.at_end()) {
        cur.expect('=');
        const int value_column = cur.column() + 1;
        param.value = Expression::parse(raw.substr(cur.pos), line_no, value_column);
        for (const auto& s : param.value->symbols()) {
          bool known = false;
          for (const auto& p : spec.params) known = known || p.symbol == s;
          if (!known) {
            throw Error(ErrorCode::UndeclaredParameter,
                        "line " + std::to_string(line_no) + ": undeclared parameter '" + s + "'");
          }
        }
      }
      spec.params.push_back(std::move(param));
    } else if (keyword == "alias") {
      std::string source;
      cur.skip();
      if (cur.pos < raw.size() && raw[cur.pos] == '"') {
        const std::size_t close = raw.find('"', cur.pos + 1);
        if (close == std::string_view::npos) syntax(line_no, cur.column(), "unterminated source name");
        source = std::string(raw.substr(cur.pos + 1, close - cur.pos - 1));
        cur.pos = close + 1;
      } else {
        source = cur.word();
      }
      if (source.empty()) syntax(line_no, cur.column(), "expected a classification source name");
      cur.expect('=');
      spec.alt_names[source] = parse_quoted(raw.substr(cur.pos), line_no, cur.column());
    } else if (keyword == "bracket") {
      cur.expect('[');
      int i = parse_basis_ref(cur);
      cur.expect(',');
      int j = parse_basis_ref(cur);
      cur.expect(']');
      cur.expect('=');
      if (i == j) syntax(line_no, kw_column, "bracket of a basis vector with itself");
      const int rhs_column = cur.column() + 1;
      Expression rhs = Expression::parse(raw.substr(cur.pos), line_no, rhs_column);
      for (const auto& s : rhs.symbols()) {
        if (auto idx = basis_index(s); idx && (*idx < 1 || *idx > kDim)) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "line " + std::to_string(line_no) + ": basis index " + s + " outside e1..e4");
        }
      }
      vector_degree(rhs.root(), line_no);
      if (vector_degree(rhs.root(), line_no) != 1 && !(rhs.root().kind == Kind::Number && rhs.root().number == 0)) {
        syntax(line_no, rhs_column, "bracket value must be a combination of e1..e4");
      }
      if (i > j) {
        std::swap(i, j);
        rhs = rhs.negated();
      }
      if (!seen.insert({i, j}).second) {
        throw Error(ErrorCode::DuplicateBracket, "line " + std::to_string(line_no) + ": bracket [e" +
                                                     std::to_string(i) + ",e" + std::to_string(j) +
                                                     "] defined twice");
      }
      spec.brackets.push_back(BracketEntry{i, j, std::move(rhs)});
      bracket_lines.push_back(line_no);
    } else {
      syntax(line_no, kw_column, "unknown statement '" + keyword + "'");
    }
  }

  std::set<std::string> declared;
  for (const auto& p : spec.params) declared.insert(p.symbol);
  for (std::size_t b = 0; b < spec.brackets.size(); ++b) {
    for (const auto& s : spec.brackets[b].rhs.symbols()) {
      if (basis_index(s)) continue;
      if (!declared.count(s)) {
        throw Error(ErrorCode::UndeclaredParameter,
                    "line " + std::to_string(bracket_lines[b]) + ": undeclared parameter '" + s + "'");
      }
    }
  }
  return spec;
}

LieAlgebraSpec load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string serialize(const LieAlgebraSpec& spec) {
  std::ostringstream os;
  os << "name = \"" << spec.name << "\"\n";
  for (const auto& p : spec.params) {
    os << "param " << p.symbol;
    if (p.value) os << " = " << p.value->str();
    os << '\n';
  }
  for (const auto& [source, label] : spec.alt_names) os << "alias \"" << source << "\" = \"" << label << "\"\n";
  for (const auto& b : spec.brackets) os << "bracket [e" << b.i << ",e" << b.j << "] = " << b.rhs.str() << '\n';
  return os.str();
}

// ---- instantiated algebras --------------------------------------------

LieAlgebra::LieAlgebra(Tensor3 structure_constants, std::string name)
    : c_(std::move(structure_constants)), name_(std::move(name)) {}

LieAlgebra LieAlgebra::instantiate(const LieAlgebraSpec& spec, const Bindings& overrides) {
  std::set<std::string> declared;
  for (const auto& p : spec.params) declared.insert(p.symbol);
  for (const auto& [symbol, value] : overrides) {
    if (!declared.count(symbol)) {
      throw Error(ErrorCode::UndeclaredParameter, "'" + symbol + "' is not a parameter of " + spec.name);
    }
  }

  Bindings bound;
  for (const auto& p : spec.params) {
    if (auto it = overrides.find(p.symbol); it != overrides.end()) {
      bound[p.symbol] = it->second;
    } else if (p.value) {
      bound[p.symbol] = p.value->evaluate(bound);
    } else {
      throw Error(ErrorCode::UnboundParameter, "parameter '" + p.symbol + "' of " + spec.name + " is unbound");
    }
  }

  LieAlgebra out;
  out.name_ = spec.name;
  out.bindings_ = bound;
  out.alt_names_ = spec.alt_names;
  for (const auto& b : spec.brackets) {
    const Vector v = linear_coefficients(b.rhs.root(), bound);
    for (int k = 1; k <= kDim; ++k) {
      out.c_(b.i, b.j, k) = v[k - 1];
      out.c_(b.j, b.i, k) = -v[k - 1];
    }
  }
  return out;
}

Vector LieAlgebra::bracket(int i, int j) const {
  Vector v(kDim);
  for (int k = 1; k <= kDim; ++k) v[k - 1] = c_(i, j, k);
  return v;
}

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y) {
  if (x.size() != kDim || y.size() != kDim) throw Error(ErrorCode::DimensionMismatch, "bracket needs 4-vectors");
  Vector out(kDim);
  for (int i = 1; i <= kDim; ++i) {
    if (x[i - 1].is_zero()) continue;
    for (int j = 1; j <= kDim; ++j) {
      if (y[j - 1].is_zero()) continue;
      const Scalar w = x[i - 1] * y[j - 1];
      for (int k = 1; k <= kDim; ++k) {
        const Scalar& c = algebra.c()(i, j, k);
        if (!c.is_zero()) out[k - 1] += w * c;
      }
    }
  }
  return out;
}

AlgebraReport check_jacobi(const LieAlgebra& algebra) {
  AlgebraReport report;
  const auto& c = algebra.c();
  for (int i = 1; i <= kDim; ++i)
    for (int j = i; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        if (c(i, j, k) != -c(j, i, k)) report.antisymmetry_violations.push_back({i, j, k});

  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j)
      for (int k = j + 1; k <= kDim; ++k) {
        const Vector ei = basis_vector(i);
        const Vector ej = basis_vector(j);
        const Vector ek = basis_vector(k);
        Vector sum = bracket(algebra, bracket(algebra, ei, ej), ek);
        const Vector t2 = bracket(algebra, bracket(algebra, ej, ek), ei);
        const Vector t3 = bracket(algebra, bracket(algebra, ek, ei), ej);
        for (int m = 0; m < kDim; ++m) sum[m] += t2[m] + t3[m];
        if (!is_zero(sum)) report.jacobi_violations.push_back({i, j, k, sum});
      }
  return report;
}

// ---- built-in families ------------------------------------------------

std::vector<std::string> Family::parameter_names() const {
  std::vector<std::string> out;
  for (const auto& p : spec.params) out.push_back(p.symbol);
  return out;
}

namespace {

using Check = std::function<std::optional<std::string>(const Bindings&)>;

std::optional<std::string> no_check(const Bindings&) { return std::nullopt; }

Family make_family(const std::string& id, const std::string& display, const std::string& body,
                   std::vector<std::pair<std::string, std::string>> domains, Check check,
                   const std::string& andrada, const std::string& mubarakzyanov, const std::string& patera) {
  Family f;
  f.id = id;
  f.display = display;
  f.spec = parse_algebra(body);
  f.spec.name = id;
  for (auto& p : f.spec.params)
    for (const auto& [symbol, text] : domains)
      if (p.symbol == symbol) p.domain = text;
  f.spec.alt_names = {{"Ghanam-Thompson", display},
                      {"Andrada et al.", andrada},
                      {"Mubarakzyanov", mubarakzyanov},
                      {"Patera et al.", patera}};
  f.domain_violation = std::move(check);
  return f;
}

const Scalar& get(const Bindings& b, const char* symbol) { return b.at(symbol); }

std::vector<Family> make_families() {
  std::vector<Family> out;
  out.push_back(make_family("g4_1", "g4,1", R"(
bracket [e2,e4] = e1
bracket [e3,e4] = e2
)", {}, no_check, "n4", "g4,1", "A4,1"));

  out.push_back(make_family("g4_2", "g4,2", R"(
param m
bracket [e1,e4] = m*e1
bracket [e2,e4] = e2
bracket [e3,e4] = e2+e3
)", {{"m", "m != 0"}},
                            [](const Bindings& b) -> std::optional<std::string> {
                              if (get(b, "m").is_zero()) return "m != 0 violated";
                              return std::nullopt;
                            },
                            "r4,a", "g4,2", "A4,2^a"));

  out.push_back(make_family("g4_3", "g4,3", R"(
bracket [e1,e4] = e1
bracket [e3,e4] = e2
)", {}, no_check, "r4,0", "g4,3", "A4,3"));

  out.push_back(make_family("g4_4", "g4,4", R"(
bracket [e1,e4] = e1
bracket [e2,e4] = e1+e2
bracket [e3,e4] = e2+e3
)", {}, no_check, "r4", "g4,4", "A4,4"));

  out.push_back(make_family("g4_5", "g4,5", R"(
param a1
param a2
bracket [e1,e4] = e1
bracket [e2,e4] = a1*e2
bracket [e3,e4] = a2*e3
)", {{"a1", "a1 != 0"}, {"a2", "a2 != 0"}},
                            [](const Bindings& b) -> std::optional<std::string> {
                              if (get(b, "a1").is_zero()) return "a1 != 0 violated";
                              if (get(b, "a2").is_zero()) return "a2 != 0 violated";
                              return std::nullopt;
                            },
                            "r4,a,b", "g4,5", "A4,5^{a,b}"));

  out.push_back(make_family("g4_6", "g4,6", R"(
param b1
param b2
bracket [e1,e4] = b1*e1
bracket [e2,e4] = b2*e2-e3
bracket [e3,e4] = e2+b2*e3
)", {{"b1", "b1 != 0"}, {"b2", "b2 >= 0"}},
                            [](const Bindings& b) -> std::optional<std::string> {
                              if (get(b, "b1").is_zero()) return "b1 != 0 violated";
                              if (get(b, "b2").sign() < 0) return "b2 >= 0 violated";
                              return std::nullopt;
                            },
                            "r'4,a,b", "g4,6", "A4,6^{a,b}"));

  out.push_back(make_family("g4_7", "g4,7", R"(
bracket [e1,e4] = 2*e1
bracket [e2,e3] = e1
bracket [e2,e4] = e2
bracket [e3,e4] = e2+e3
)", {}, no_check, "h4", "g4,7", "A4,7"));

  out.push_back(make_family("g4_8", "g4,8", R"(
bracket [e2,e3] = e1
bracket [e2,e4] = e2
bracket [e3,e4] = -e3
)", {}, no_check, "d4", "g4,8(-1)", "A4,8"));

  out.push_back(make_family("g4_9", "g4,9", R"(
param p
bracket [e1,e4] = (p+1)*e1
bracket [e2,e3] = e1
bracket [e2,e4] = e2
bracket [e3,e4] = p*e3
)", {{"p", "-1 < p <= 1"}},
                            [](const Bindings& b) -> std::optional<std::string> {
                              const Scalar& p = get(b, "p");
                              if (p <= Scalar(-1) || p > Scalar(1)) return "-1 < p <= 1 violated";
                              return std::nullopt;
                            },
                            "d4,1/(1+b)", "g4,8", "A4,9^b"));

  out.push_back(make_family("g4_10", "g4,10", R"(
bracket [e2,e3] = e1
bracket [e2,e4] = -e3
bracket [e3,e4] = e2
)", {}, no_check, "d'4,0", "g4,9(0)", "A4,10"));

  out.push_back(make_family("g4_11", "g4,11", R"(
param q
bracket [e1,e4] = 2*q*e1
bracket [e2,e3] = e1
bracket [e2,e4] = q*e2-e3
bracket [e3,e4] = e2+q*e3
)", {{"q", "q > 0"}},
                            [](const Bindings& b) -> std::optional<std::string> {
                              if (get(b, "q").sign() <= 0) return "q > 0 violated";
                              return std::nullopt;
                            },
                            "d'4,a", "g4,9", "A4,11^a"));

  out.push_back(make_family("g4_12", "g4,12", R"(
bracket [e1,e3] = e1
bracket [e1,e4] = -e2
bracket [e2,e3] = e2
bracket [e2,e4] = e1
)", {}, no_check, "aff(C)", "g4,10", "A4,12"));
  return out;
}

}  // namespace

const std::vector<Family>& builtin_families() {
  static const std::vector<Family> families = make_families();
  return families;
}

const Family& find_family(std::string_view id) {
  std::string key(id);
  for (auto& ch : key)
    if (ch == '.' || ch == ',') ch = '_';
  for (const auto& f : builtin_families())
    if (f.id == key) return f;
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(id) + "' (expected g4_1 .. g4_12)");
}

LieAlgebra builtin(std::string_view family, const Bindings& bindings) {
  const Family& f = find_family(family);
  for (const auto& [symbol, value] : bindings) {
    bool known = false;
    for (const auto& p : f.spec.params) known = known || p.symbol == symbol;
    if (!known) throw Error(ErrorCode::UndeclaredParameter, "'" + symbol + "' is not a parameter of " + f.id);
  }
  for (const auto& p : f.spec.params) {
    if (!bindings.count(p.symbol)) {
      throw Error(ErrorCode::UnboundParameter, "parameter '" + p.symbol + "' of " + f.id + " is unbound");
    }
  }
  if (auto violation = f.domain_violation(bindings)) {
    throw Error(ErrorCode::DomainViolation, f.id + ": " + *violation);
  }
  return LieAlgebra::instantiate(f.spec, bindings);
}

LieAlgebra abelian() { return LieAlgebra(Tensor3{}, "abelian"); }

}  // namespace hnlie
