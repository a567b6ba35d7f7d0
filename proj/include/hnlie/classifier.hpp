#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hnlie/connection.hpp"

namespace hnlie {

/// The (0,3)-tensors with the symmetries of F_alpha, split into the basic
/// classes: {W2, W4} for alpha = 1, {W1, W2, W3} for alpha = 2, 3.
struct AdmissibleSpace {
  struct ClassSubspace {
    std::string name;  // "W1" .. "W4"
    std::vector<Tensor3> basis;
  };

  int alpha = 1;
  std::vector<Tensor3> basis;
  std::vector<ClassSubspace> classes;  // ascending class number
  /// Adjustments made to force a direct sum; empty when none were needed.
  std::vector<std::string> notes;
  /// 64 x n matrix with the class bases as columns, in `classes` order.
  Matrix combined;
  /// Rows annihilating exactly the admissible tensors.
  Matrix constraints;

  const ClassSubspace* find(const std::string& name) const;
};

/// Linear constraint operators on the 64 components (flat index 16(i-1)+4(j-1)+(k-1)).
Matrix symmetry_constraints(int alpha, const HNStructure& h);
/// Rows of T -> sigma_{x,y,z} T(x,y,z) (twisted: T(x,y,J_a z)).
Matrix cyclic_sum_operator(int alpha, const HNStructure& h, bool twisted);
Matrix lee_operator(const HNStructure& h);
/// Tensor of the W4 (alpha = 1) or W1 (alpha = 2, 3) defining formula for theta.
Tensor3 lee_family_tensor(int alpha, const HNStructure& h, const Vector& theta);

/// Builds the space and verifies the direct sum. Throws DecompositionFailure.
AdmissibleSpace build_admissible_space(int alpha, const HNStructure& h);
/// Cached build for standard_h(); thread-safe.
const AdmissibleSpace& admissible_space(int alpha);

/// Throws NotAdmissible if F lacks the symmetries, DecompositionFailure if
/// the solve fails.
std::map<std::string, Tensor3> decompose(const Tensor3& F, const AdmissibleSpace& space);

struct ClassLabel {
  int alpha = 1;
  std::vector<int> components;  // ascending class numbers with nonzero part

  /// "W0", "W4", "W24", "W123", ...
  std::string label() const;
  /// Parses "W0", "W24", "W123".
  static ClassLabel parse(int alpha, const std::string& text);
  /// Every nonzero component of *this is also in `other`.
  bool contained_in(const ClassLabel& other) const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel label_of(const Tensor3& F, int alpha, const HNStructure& h);
std::array<ClassLabel, 3> classify(const LieAlgebra& algebra, const HNStructure& h);
std::array<ClassLabel, 3> classify(const FundamentalTensors& ft, const HNStructure& h);

}  // namespace hnlie
