#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneloop/invariants.hpp"
#include "oneloop/solution_io.hpp"

namespace oneloop {

struct InvariantRow {
  TorsionResult result;
  Rational bound;       // span / n
  NFElem value_at_one;  // recorded, not interpreted
};

struct CrossCheck {
  int n = 0;
  bool equal = false;
};

struct InvariantsReport {
  std::vector<InvariantRow> rows;
  std::vector<CrossCheck> cross_checks;
  bool pass = true;  // all cross-checks equal
};

InvariantsReport run_invariants(const std::vector<NFElem>& initial_c,
                                const LayeredTriangulation& L,
                                const ObstructionData& obs,
                                const std::vector<int>& ns,
                                const std::vector<Method>& methods);

std::string invariants_text(const InvariantsReport& report);
std::string invariants_json(const InvariantsReport& report);

struct VerifyReport {
  bool values_nonzero = false;
  bool c_residual_zero = false;
  std::optional<bool> theta_residual_zero;
  std::vector<std::string> notes;

  bool pass() const {
    return values_nonzero && c_residual_zero &&
           (!theta_residual_zero || *theta_residual_zero);
  }
};

VerifyReport run_verify(const SolutionFile& solution,
                        const LayeredTriangulation& L,
                        const ObstructionData& obs);

std::string verify_text(const VerifyReport& report);
std::string verify_json(const VerifyReport& report);

}  // namespace oneloop
