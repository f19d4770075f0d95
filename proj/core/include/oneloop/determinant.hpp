#pragma once

#include "oneloop/laurent.hpp"
#include "oneloop/matrix.hpp"

namespace oneloop {

// Exact determinant over the number field by fraction-free (Bareiss)
// elimination.
NFElem det_field(const Matrix<NFElem>& m);

// Exact determinant of a Laurent-polynomial matrix: shift each row by a
// power of t so entries are ordinary polynomials, bound the degree D by the
// sum of row-wise maximum degrees, evaluate at the D+1 rational nodes
// 0,1,...,D, take scalar determinants, interpolate, then unshift.
LaurentPolynomial det_laurent(const Matrix<LaurentPolynomial>& m);

// Characteristic polynomial det(tI - a) as a Laurent polynomial.
LaurentPolynomial char_poly(const Matrix<NFElem>& a);

}  // namespace oneloop
