#pragma once

#include <string>

#include "oneloop/laurent.hpp"

namespace oneloop::fixtures {

// The m036 bundle: genus-2 one-puncture fiber, monodromy given by one edge
// relabeling and four flips.
extern const char* const kM036Monodromy;

// Solution over Q[b]/(b^2 - 2b - 1) for the trivial obstruction class.
extern const char* const kM036TrivialSolution;

// Solution over Q[a]/(a^3 + a^2 + a - 1) for the signed class, with the
// matching equation-level obstruction signs.
extern const char* const kM036SignedSolution;
extern const char* const kM036SignedObstruction;

FieldPtr m036_trivial_field();
FieldPtr m036_signed_field();

// The four published polynomials, over the matching field.
LaurentPolynomial m036_tau3_trivial();
LaurentPolynomial m036_tau2_trivial();
LaurentPolynomial m036_tau3_signed();
LaurentPolynomial m036_tau2_signed();

}  // namespace oneloop::fixtures
