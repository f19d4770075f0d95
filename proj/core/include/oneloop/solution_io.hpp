#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneloop/number_field.hpp"

namespace oneloop {

// A candidate (super-)Ptolemy assignment on the fiber surface: the number
// field header, the 3n initial edge values and optionally the 2n initial
// face values.
struct SolutionFile {
  FieldPtr field;
  std::vector<NFElem> c;
  std::optional<std::vector<NFElem>> theta;
};

SolutionFile parse_solution(const std::string& text);
std::string solution_to_string(const SolutionFile& s);

}  // namespace oneloop
