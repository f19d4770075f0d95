#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oneloop/errors.hpp"
#include "oneloop/rational.hpp"

namespace oneloop {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// A number field Q[x]/(f) given by a monic integer-free minimal polynomial
// f with rational coefficients, f(x) = c_0 + c_1 x + ... + x^d.
class NumberField {
 public:
  NumberField(std::string name, std::vector<Rational> min_poly,
              std::string generator_name = "a");

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }
  const std::string& name() const { return name_; }
  const std::string& generator_name() const { return generator_name_; }

  // Same field means same minimal polynomial; names are cosmetic.
  bool same_as(const NumberField& other) const {
    return min_poly_ == other.min_poly_;
  }

  static FieldPtr rationals();  // Q as Q[x]/(x)
  static FieldPtr make(std::string name, std::vector<Rational> min_poly,
                       std::string generator_name = "a");

  std::string header() const;  // "field: K; minpoly: ...; gen: a"
  static FieldPtr parse_header(const std::string& line);

 private:
  std::string name_;
  std::vector<Rational> min_poly_;
  std::string generator_name_;
};

// Element of a number field as a coordinate vector over the power basis
// 1, x, ..., x^{d-1}.
class NFElem {
 public:
  NFElem(FieldPtr field, std::vector<Rational> coords);

  static NFElem zero(const FieldPtr& field);
  static NFElem one(const FieldPtr& field);
  static NFElem from_rational(const FieldPtr& field, const Rational& r);
  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // all higher coordinates vanish
  Rational rational_part() const { return coords_[0]; }

  NFElem operator-() const;
  NFElem& operator+=(const NFElem& rhs);
  NFElem& operator-=(const NFElem& rhs);
  NFElem& operator*=(const NFElem& rhs);
  NFElem& operator/=(const NFElem& rhs);

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }

  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  NFElem inverse() const;
  NFElem pow(long e) const;

  // Image under the field morphism sending the generator to gen_image;
  // gen_image must be a root of the minimal polynomial for this to be an
  // automorphism.
  NFElem map_generator(const NFElem& gen_image) const;

  std::string str() const;  // e.g. "-a - a^2", "1/2", "0"

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

enum class NFOp { Add, Sub, Mul, Div };

// Spec-level entry point; the operators above are the idiomatic surface.
NFElem nf_arith(const NFElem& a, const NFElem& b, NFOp op);

void check_same_field(const NFElem& a, const NFElem& b);

// Polynomial parsing over one variable with rational coefficients, used for
// minimal polynomials ("x^2 - 2*x - 1") and field elements ("-a - a^2").
// Returns dense coefficients c_0..c_deg.
std::vector<Rational> parse_polynomial(const std::string& text,
                                       const std::string& var);

// Renders dense rational coefficients as a polynomial in var.
std::string polynomial_to_string(const std::vector<Rational>& coeffs,
                                 const std::string& var);

// Parses an element in the field's generator (also accepts "x").
NFElem parse_element(const FieldPtr& field, const std::string& text);

}  // namespace oneloop
