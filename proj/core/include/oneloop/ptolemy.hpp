#pragma once

#include <vector>

#include "oneloop/bundle.hpp"
#include "oneloop/dual.hpp"
#include "oneloop/matrix.hpp"
#include "oneloop/number_field.hpp"
#include "oneloop/obstruction.hpp"

namespace oneloop {

// All 3n+N Ptolemy values, inductively determined by the initial 3n under
// the (sign-deformed) Ptolemy equations.
struct PtolemyState {
  FieldPtr field;
  std::vector<NFElem> values;
  ObstructionData obstruction;
};

// All 2n+2N face values.
struct ThetaState {
  std::vector<NFElem> values;
};

PtolemyState propagate_c(const std::vector<NFElem>& initial,
                         const LayeredTriangulation& L,
                         const ObstructionData& obs);

// Same propagation carrying exact partial derivatives with respect to the
// 3n initial values.
std::vector<Dual> propagate_c_dual(const std::vector<NFElem>& initial,
                                   const LayeredTriangulation& L,
                                   const ObstructionData& obs);

ThetaState propagate_theta(const PtolemyState& state,
                           const std::vector<NFElem>& initial_theta,
                           const LayeredTriangulation& L);

// The 3n differences c'_j - c_j of the signed closure image.
std::vector<NFElem> closure_residual_c(const PtolemyState& state,
                                       const LayeredTriangulation& L);

std::vector<NFElem> closure_residual_theta(const PtolemyState& state,
                                           const ThetaState& theta,
                                           const LayeredTriangulation& L);

// (k^{d_1} c_1, ..., k^{d_{3n}} c_{3n}) for a nonzero scalar k.
std::vector<NFElem> scaling_act(const std::vector<NFElem>& initial,
                                const NFElem& k, const std::vector<int>& d);

// Puncture-incidence exponents d_j in {0, 1, 2} for the given puncture.
std::vector<int> puncture_exponents(const SurfaceTriangulation& surface,
                                    int puncture);

// Exact Jacobian of the closure image: entry (i, j) is the derivative of
// c'_i with respect to c_j at the given initial values.
Matrix<NFElem> ptolemy_jacobian(const std::vector<NFElem>& initial,
                                const LayeredTriangulation& L,
                                const ObstructionData& obs);

// Matrix of the linear map theta -> theta' over the fixed Ptolemy state,
// built by propagating the 2n standard basis vectors.
Matrix<NFElem> theta_monodromy_matrix(const PtolemyState& state,
                                      const LayeredTriangulation& L);

}  // namespace oneloop
