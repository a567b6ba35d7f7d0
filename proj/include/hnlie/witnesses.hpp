#pragma once

#include <string>
#include <vector>

#include "hnlie/expression.hpp"

namespace hnlie {

struct Witness {
  std::string family;
  Bindings bindings;
  std::string row;   // Table 2 row id, optional
  std::string note;
};

struct WitnessSet {
  int version = 0;
  std::vector<Witness> table2;
  std::vector<Witness> theorem5;
};

/// Path of the witness file shipped in the source tree.
std::string default_witness_path();

/// Throws Error(Io) or Error(SyntaxError).
WitnessSet load_witnesses(const std::string& path);
WitnessSet parse_witnesses(const std::string& json_text);

}  // namespace hnlie
