#pragma once

#include <map>
#include <string>

#include "oneloop/number_field.hpp"

namespace oneloop {

// Finitely supported Laurent polynomial over a number field; no zero
// coefficients are stored.
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(FieldPtr field) : field_(std::move(field)) {}

  static LaurentPolynomial monomial(const NFElem& c, long exp);
  static LaurentPolynomial constant(const NFElem& c) { return monomial(c, 0); }
  static LaurentPolynomial t(const FieldPtr& field) {
    return monomial(NFElem::one(field), 1);
  }

  const FieldPtr& field() const { return field_; }
  const std::map<long, NFElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long min_exp() const;  // throws ZeroPolynomial on zero
  long max_exp() const;
  long span() const { return max_exp() - min_exp(); }
  NFElem coeff(long exp) const;

  void add_term(long exp, const NFElem& c);  // accumulates, prunes zeros

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a *= b;
  }

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b);
  friend bool operator!=(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return !(a == b);
  }

  LaurentPolynomial shifted(long k) const;  // multiply by t^k

  // Evaluate at a field element; t must be nonzero if negative exponents
  // are present.
  NFElem eval(const NFElem& t_value) const;

  std::string str() const;

 private:
  FieldPtr field_;
  std::map<long, NFElem> terms_;
};

enum class LaurentOp { Add, Sub, Mul };

LaurentPolynomial laurent_arith(const LaurentPolynomial& p,
                                const LaurentPolynomial& q, LaurentOp op);

// Canonical representative of the orbit {±t^k p}: minimum exponent zero and
// the first nonzero rational coordinate of the t^0 coefficient positive.
LaurentPolynomial normalize_loop(const LaurentPolynomial& p);

// Equality up to multiplication by ±t^k.
bool loop_equal(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace oneloop
