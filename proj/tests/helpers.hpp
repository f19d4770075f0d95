#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oneloop/determinant.hpp"
#include "oneloop/laurent.hpp"
#include "oneloop/matrix.hpp"

namespace testutil {

using namespace oneloop;

inline Rational random_rational(std::mt19937& rng, int max_abs = 9) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline NFElem random_element(const FieldPtr& field, std::mt19937& rng,
                             int max_abs = 9) {
  std::vector<Rational> coords;
  for (int i = 0; i < field->degree(); ++i)
    coords.push_back(random_rational(rng, max_abs));
  return NFElem(field, std::move(coords));
}

inline NFElem random_nonzero_element(const FieldPtr& field,
                                     std::mt19937& rng, int max_abs = 9) {
  for (;;) {
    NFElem e = random_element(field, rng, max_abs);
    if (!e.is_zero()) return e;
  }
}

inline LaurentPolynomial random_laurent(const FieldPtr& field,
                                        std::mt19937& rng, int min_exp = -3,
                                        int max_exp = 3, int max_abs = 5) {
  LaurentPolynomial p(field);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int e = min_exp; e <= max_exp; ++e)
    if (pick(rng) == 0) p.add_term(e, random_element(field, rng, max_abs));
  return p;
}

// Determinant by explicit permutation expansion; usable up to size 4.
inline LaurentPolynomial permutation_det(const Matrix<LaurentPolynomial>& m) {
  const size_t n = m.rows();
  const FieldPtr field = m.at(0, 0).field();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial det(field);
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    LaurentPolynomial term =
        LaurentPolynomial::constant(NFElem::from_rational(field, sign));
    for (size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline FieldPtr beta_field() {
  // Q[b]/(b^2 - 2b - 1)
  return NumberField::make("K", {Rational(-1), Rational(-2), Rational(1)},
                           "b");
}

inline FieldPtr alpha_field() {
  // Q[a]/(a^3 + a^2 + a - 1)
  return NumberField::make(
      "K", {Rational(-1), Rational(1), Rational(1), Rational(1)}, "a");
}

}  // namespace testutil
