#include "oneloop/fixtures.hpp"

#include <array>
#include <vector>

namespace oneloop::fixtures {

const char* const kM036Monodromy =
    "triangulation: [(~8, ~1, ~4), (~7, ~3, 2), (~6, ~2, 1), (~5, 0, 3), "
    "(~0, 7, 8), (4, 5, 6)]\n"
    "isometry: [1, 2, 3, 4, 5, 6, 7, 8, ~0]\n"
    "flips: [8, 5, 7, 4]\n";

const char* const kM036TrivialSolution =
    "field: K; minpoly: x^2 - 2*x - 1; gen: b\n"
    "c = [1, 1, 1, 1, b, 1 - b, 1 - b, b - 2, -1]\n";

const char* const kM036SignedSolution =
    "field: K; minpoly: x^3 + x^2 + x - 1; gen: a\n"
    "c = [1, 1, 1, 1, a, -a - a^2, -a - a^2, -a, -1]\n";

const char* const kM036SignedObstruction =
    "obstruction: signs\n"
    "layer 1: ptolemy=(+1,-1,+1) faceB=(-1,-1) faceA=(-1,+1)\n"
    "layer 2: ptolemy=(+1,+1,-1) faceB=(+1,-1) faceA=(+1,+1)\n"
    "layer 3: ptolemy=(+1,-1,+1) faceB=(-1,-1) faceA=(-1,+1)\n"
    "layer 4: ptolemy=(+1,+1,+1) faceB=(+1,+1) faceA=(+1,+1)\n"
    "closure faces: [+1, +1, +1, +1, +1, +1]\n";

FieldPtr m036_trivial_field() {
  static FieldPtr field = NumberField::make(
      "K", {Rational(-1), Rational(-2), Rational(1)}, "b");
  return field;
}

FieldPtr m036_signed_field() {
  static FieldPtr field = NumberField::make(
      "K", {Rational(-1), Rational(1), Rational(1), Rational(1)}, "a");
  return field;
}

namespace {

LaurentPolynomial from_rational_coeffs(const FieldPtr& field,
                                       const std::vector<long>& coeffs) {
  LaurentPolynomial p(field);
  for (size_t k = 0; k < coeffs.size(); ++k)
    p.add_term(static_cast<long>(k),
               NFElem::from_rational(field, Rational(coeffs[k])));
  return p;
}

LaurentPolynomial from_cubic_coeffs(
    const FieldPtr& field, const std::vector<std::array<long, 3>>& coeffs) {
  LaurentPolynomial p(field);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    std::vector<Rational> coords{Rational(coeffs[k][0]),
                                 Rational(coeffs[k][1]),
                                 Rational(coeffs[k][2])};
    p.add_term(static_cast<long>(k), NFElem(field, std::move(coords)));
  }
  return p;
}

}  // namespace

// Some printed tables of this value carry sign typos at t^1, t^4 and t^6;
// the coefficients below are forced by the anti-reciprocity
// p(1/t) = -t^{-9} p(t) and by p(1) = 0, both of which the trivial-class
// torsion must satisfy.
LaurentPolynomial m036_tau3_trivial() {
  return from_rational_coeffs(m036_trivial_field(),
                              {-1, -4, 0, 2, -1, 1, -2, 0, 4, 1});
}

LaurentPolynomial m036_tau2_trivial() {
  return from_rational_coeffs(m036_trivial_field(), {1, -2, 1, 0, 1, -2, 1});
}

LaurentPolynomial m036_tau3_signed() {
  return from_cubic_coeffs(m036_signed_field(),
                           {{-1, 0, 0},
                            {-2, -4, -2},
                            {-6, -6, -4},
                            {-8, -4, -6},
                            {-3, -4, 2},
                            {3, 4, -2},
                            {8, 4, 6},
                            {6, 6, 4},
                            {2, 4, 2},
                            {1, 0, 0}});
}

LaurentPolynomial m036_tau2_signed() {
  return from_cubic_coeffs(m036_signed_field(), {{1, 0, 0},
                                                 {2, 2, 2},
                                                 {4, 2, 1},
                                                 {2, 4, 2},
                                                 {4, 2, 1},
                                                 {2, 2, 2},
                                                 {1, 0, 0}});
}

}  // namespace oneloop::fixtures
