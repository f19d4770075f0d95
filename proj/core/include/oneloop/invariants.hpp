#pragma once

#include <string>
#include <vector>

#include "oneloop/determinant.hpp"
#include "oneloop/laurent.hpp"
#include "oneloop/ptolemy.hpp"

namespace oneloop {

enum class Method { FullMatrix, ReducedJacobian };

std::string method_name(Method m);

struct TorsionResult {
  int n = 0;
  Method method = Method::ReducedJacobian;
  LaurentPolynomial polynomial;  // normalize_loop form
  std::string obstruction;
};

// det(tI - dc'/dc) from the reduced 3n x 3n Jacobian of the composed
// propagation-plus-closure map.
TorsionResult torsion3_reduced(const std::vector<NFElem>& initial_c,
                               const LayeredTriangulation& L,
                               const ObstructionData& obs);

// det(tI - dtheta'/dtheta) from the 2n x 2n matrix of the linear theta
// monodromy.
TorsionResult torsion2_reduced(const std::vector<NFElem>& initial_c,
                               const LayeredTriangulation& L,
                               const ObstructionData& obs);

// Full (3n+N) x (3n+N) block determinant with rows t c_i - c'_i and the
// scaled Ptolemy rows.
TorsionResult oneloop3_full(const std::vector<NFElem>& initial_c,
                            const LayeredTriangulation& L,
                            const ObstructionData& obs);

// Full (2n+2N) x (2n+2N) block determinant with rows t theta_i - theta'_i
// and the scaled face-equation rows.
TorsionResult oneloop2_full(const std::vector<NFElem>& initial_c,
                            const LayeredTriangulation& L,
                            const ObstructionData& obs);

// (max exponent - min exponent) / n.
Rational norm_lower_bound(const LaurentPolynomial& p, int n);

}  // namespace oneloop
