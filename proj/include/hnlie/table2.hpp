#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnlie/classifier.hpp"
#include "hnlie/regions.hpp"
#include "hnlie/witnesses.hpp"

namespace hnlie {

/// One row of the class correspondence table. Rows of a family are tried in
/// order and the first whose region contains the bindings applies.
struct Table2Row {
  std::string id;          // "g4_5/r3"
  std::string parameters;  // region as stated
  std::array<std::string, 3> labels;
  Region region;
  /// False for rows whose stated region is shadowed by earlier rows; such
  /// rows are evaluated on `alternate` and annotated, never asserted.
  bool asserted = true;
  std::optional<Region> alternate;
  std::string annotation;
};

const std::vector<Table2Row>& table2_rows();

/// First asserted row of `family` containing the bindings, or nullptr.
const Table2Row* match_row(const std::string& family, const Bindings& bindings);

/// Classes a family is stated never to belong to, per J_alpha.
/// "Belongs to W_ij" is read as membership: the computed label is a sub-join.
struct NegativeBullet {
  std::string family;
  std::string region;
  std::array<std::vector<std::string>, 3> excluded;
};

const std::vector<NegativeBullet>& negative_bullets();

/// Excluded classes that contain the computed labels.
std::vector<std::string> bullet_violations(const std::string& family, const std::array<ClassLabel, 3>& labels);

struct Table2Check {
  std::string row;
  std::string family;
  Bindings bindings;
  std::string source;  // "witness", "sample" or "alternate"
  std::array<std::string, 3> expected;
  std::array<std::string, 3> computed;
  bool exact = false;
  bool contained = false;
  bool asserted = true;
  std::vector<std::string> bullet_violations;
  std::string annotation;
};

struct Table2Report {
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Table2Check> checks;
  std::vector<std::string> notes;

  /// Asserted witnesses reproduce the reference labels exactly.
  bool witnesses_exact() const;
  /// Every asserted check lies inside its row's class.
  bool samples_contained() const;
  bool bullets_hold() const;
  bool all_agree() const { return witnesses_exact() && samples_contained() && bullets_hold(); }
};

Table2Report table2_report(const WitnessSet& witnesses, int samples_per_region, std::uint64_t seed);

}  // namespace hnlie
