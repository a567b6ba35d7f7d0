#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hnlie/classifier.hpp"
#include "hnlie/curvature.hpp"
#include "hnlie/table2.hpp"
#include "hnlie/theorem5.hpp"
#include "json.hpp"

namespace hnlie {

inline constexpr const char* kToolVersion = "1.0.0";

/// {kind, meta{version, seed, samples}, inputs, payload}; scalars are exact strings.
struct Report {
  std::string kind;  // classify | curvature | verify-table2 | verify-theorem5
  nlohmann::json meta;
  nlohmann::json inputs;
  nlohmann::json payload;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

enum class Format { Text, Json };

struct AlgebraInput {
  std::string family;  // builtin id, or empty for files
  std::string file;
  LieAlgebra algebra;
};

nlohmann::json to_json(const Bindings& b);
Bindings bindings_from_json(const nlohmann::json& j);

Report make_classify_report(const AlgebraInput& input, const std::array<ClassLabel, 3>& labels);
Report make_curvature_report(const AlgebraInput& input, const Connection& conn, const CurvatureReport& c);
Report make_table2_report(const Table2Report& r);
Report make_theorem5_report(const Theorem5Report& r);

std::string emit(const Report& report, Format format);

}  // namespace hnlie
