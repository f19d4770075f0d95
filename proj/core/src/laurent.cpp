#include "oneloop/laurent.hpp"

#include <sstream>

namespace oneloop {

LaurentPolynomial LaurentPolynomial::monomial(const NFElem& c, long exp) {
  LaurentPolynomial p(c.field());
  if (!c.is_zero()) p.terms_.emplace(exp, c);
  return p;
}

long LaurentPolynomial::min_exp() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exp() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.rbegin()->first;
}

NFElem LaurentPolynomial::coeff(long exp) const {
  auto it = terms_.find(exp);
  if (it == terms_.end()) return NFElem::zero(field_);
  return it->second;
}

void LaurentPolynomial::add_term(long exp, const NFElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

static void check_same_field(const LaurentPolynomial& a,
                             const LaurentPolynomial& b) {
  if (a.field() == b.field()) return;
  if (!a.field()->same_as(*b.field())) throw FieldMismatch();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_same_field(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  check_same_field(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  check_same_field(*this, rhs);
  LaurentPolynomial out(field_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  check_same_field(a, b);
  return a.terms_ == b.terms_;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

NFElem LaurentPolynomial::eval(const NFElem& t_value) const {
  NFElem out = NFElem::zero(field_);
  for (const auto& [e, c] : terms_) out += c * t_value.pow(e);
  return out;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool simple = cs.find_first_of("+- ") == std::string::npos ||
                  (cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos);
    if (!simple) cs = "(" + cs + ")";
    os << cs << "*t^" << e;
  }
  return os.str();
}

LaurentPolynomial laurent_arith(const LaurentPolynomial& p,
                                const LaurentPolynomial& q, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return p + q;
    case LaurentOp::Sub: return p - q;
    case LaurentOp::Mul: return p * q;
  }
  throw Error("unknown op");
}

LaurentPolynomial normalize_loop(const LaurentPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  LaurentPolynomial out = p.shifted(-p.min_exp());
  const NFElem c0 = out.coeff(0);
  for (const Rational& r : c0.coords()) {
    if (r == 0) continue;
    if (r < 0) return -out;
    break;
  }
  return out;
}

bool loop_equal(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize_loop(p) == normalize_loop(q);
}

}  // namespace oneloop
