#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnlie/expression.hpp"
#include "hnlie/tensor.hpp"

namespace hnlie {

struct Parameter {
  std::string symbol;
  /// Bound value expression; unset for family templates.
  std::optional<Expression> value;
  /// Human-readable domain constraint, e.g. "m != 0".
  std::string domain;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// One nonzero bracket [e_i, e_j] = rhs with i < j (1-based). `rhs` is a
/// linear combination of e1..e4 with coefficients in the parameters.
struct BracketEntry {
  int i = 0;
  int j = 0;
  Expression rhs;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// A 4-dimensional Lie algebra given by its nonzero brackets.
///
/// File grammar (line oriented, '#' starts a comment):
///
///     name = "g4.5"
///     param a1 = 1/2
///     param a2                      # declared, bound later
///     alias Patera = "A4,5"
///     alias "Andrada et al." = "r4,a,b"   # quote names with spaces
///     bracket [e1,e4] = e1
///     bracket [e2,e4] = a1*e2
///
/// Brackets are normalized to i < j ([e4,e1] = x is stored as [e1,e4] = -(x)).
struct LieAlgebraSpec {
  std::string name;
  std::vector<Parameter> params;
  std::vector<BracketEntry> brackets;
  std::map<std::string, std::string> alt_names;

  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

LieAlgebraSpec parse_algebra(std::string_view text);
LieAlgebraSpec load_algebra(const std::string& path);
std::string serialize(const LieAlgebraSpec& spec);

/// Structure constants c(i,j,k) = c^k_{ij}, i.e. [e_i,e_j] = sum_k c^k_{ij} e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Raw constants; no validation (see check_jacobi).
  explicit LieAlgebra(Tensor3 structure_constants, std::string name = "custom");

  /// Binds every parameter (spec values first, then `overrides`) and
  /// expands the brackets.
  static LieAlgebra instantiate(const LieAlgebraSpec& spec, const Bindings& overrides = {});

  const Tensor3& c() const { return c_; }
  const std::string& name() const { return name_; }
  const Bindings& bindings() const { return bindings_; }
  const std::map<std::string, std::string>& alt_names() const { return alt_names_; }

  /// [e_i, e_j] as a coordinate vector.
  Vector bracket(int i, int j) const;

 private:
  Tensor3 c_;
  std::string name_;
  Bindings bindings_;
  std::map<std::string, std::string> alt_names_;
};

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y);

struct JacobiViolation {
  int i, j, k;
  Vector value;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct AlgebraReport {
  std::vector<std::array<int, 3>> antisymmetry_violations;  // (i, j, k) with c^k_ij != -c^k_ji
  std::vector<JacobiViolation> jacobi_violations;
  bool ok() const { return antisymmetry_violations.empty() && jacobi_violations.empty(); }
};

AlgebraReport check_jacobi(const LieAlgebra& algebra);

// ---- built-in families ------------------------------------------------

struct Family {
  std::string id;       // "g4_5"
  std::string display;  // "g4,5"
  LieAlgebraSpec spec;  // parameters unbound
  /// Returns a description of the violated constraint, or nullopt.
  std::function<std::optional<std::string>(const Bindings&)> domain_violation;
  /// Parameter symbols in declaration order.
  std::vector<std::string> parameter_names() const;
};

const std::vector<Family>& builtin_families();

/// Accepts "g4_5", "g4.5" and "g4,5". Throws Error(UnknownFamily).
const Family& find_family(std::string_view id);

/// Throws UnboundParameter, UndeclaredParameter or DomainViolation.
LieAlgebra builtin(std::string_view family, const Bindings& bindings = {});

/// Abelian 4-dimensional algebra (all brackets zero).
LieAlgebra abelian();

}  // namespace hnlie
