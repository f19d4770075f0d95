#include "oneloop/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace oneloop {

namespace {

// Dense polynomial helpers over Q, lowest degree first, no trailing zeros.
void strip(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Remainder of p modulo the monic polynomial f.
std::vector<Rational> poly_mod(std::vector<Rational> p,
                               const std::vector<Rational>& f) {
  const size_t d = f.size() - 1;
  strip(p);
  while (p.size() > d) {
    const Rational lead = p.back();
    const size_t shift = p.size() - 1 - d;
    if (lead != 0) {
      for (size_t i = 0; i < d; ++i) p[shift + i] -= lead * f[i];
    }
    p.pop_back();
    strip(p);
  }
  return p;
}

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic
// unless zero.
struct ExtGcd {
  std::vector<Rational> g, u, v;
};

std::vector<Rational> poly_sub(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// Division with remainder: a = q*b + r, b nonzero.
void poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b,
                 std::vector<Rational>& q, std::vector<Rational>& r) {
  q.clear();
  strip(a);
  if (a.size() < b.size()) {
    r = a;
    return;
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    strip(a);
  }
  strip(q);
  r = a;
}

ExtGcd ext_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  std::vector<Rational> u0{Rational(1)}, v0, u1, v1{Rational(1)};
  strip(a);
  strip(b);
  while (!b.empty()) {
    std::vector<Rational> q, r;
    poly_divmod(a, b, q, r);
    auto u2 = poly_sub(u0, poly_mul(q, u1));
    auto v2 = poly_sub(v0, poly_mul(q, v1));
    a = b;
    b = r;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (!a.empty() && a.back() != 1) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {a, u0, v0};
}

}  // namespace

NumberField::NumberField(std::string name, std::vector<Rational> min_poly,
                         std::string generator_name)
    : name_(std::move(name)),
      min_poly_(std::move(min_poly)),
      generator_name_(std::move(generator_name)) {
  if (min_poly_.size() < 2) throw Error("minimal polynomial must have degree >= 1");
  if (min_poly_.back() != 1) throw Error("minimal polynomial must be monic");
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = std::make_shared<NumberField>(
      "Q", std::vector<Rational>{Rational(0), Rational(1)}, "x");
  return q;
}

FieldPtr NumberField::make(std::string name, std::vector<Rational> min_poly,
                           std::string generator_name) {
  return std::make_shared<NumberField>(std::move(name), std::move(min_poly),
                                       std::move(generator_name));
}

std::string NumberField::header() const {
  std::ostringstream os;
  os << "field: " << name_ << "; minpoly: "
     << polynomial_to_string(min_poly_, "x") << "; gen: " << generator_name_;
  return os.str();
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw Error("element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw Error("coordinate vector length does not match field degree");
}

NFElem NFElem::zero(const FieldPtr& field) {
  return NFElem(field, std::vector<Rational>(field->degree(), Rational(0)));
}

NFElem NFElem::one(const FieldPtr& field) {
  return from_rational(field, Rational(1));
}

NFElem NFElem::from_rational(const FieldPtr& field, const Rational& r) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = r;
  return NFElem(field, std::move(c));
}

NFElem NFElem::generator(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() >= 2) c[1] = 1;
  return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool NFElem::is_one() const {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool NFElem::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r == 0; });
}

void check_same_field(const NFElem& a, const NFElem& b) {
  if (a.field() == b.field()) return;
  if (!a.field()->same_as(*b.field())) throw FieldMismatch();
}

NFElem NFElem::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return NFElem(field_, std::move(c));
}

NFElem& NFElem::operator+=(const NFElem& rhs) {
  check_same_field(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& rhs) {
  check_same_field(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& rhs) {
  check_same_field(*this, rhs);
  auto prod = poly_mod(poly_mul(coords_, rhs.coords_),
                       field_->minimal_polynomial());
  prod.resize(field_->degree(), Rational(0));
  coords_ = std::move(prod);
  return *this;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  std::vector<Rational> a(coords_);
  strip(a);
  auto [g, u, v] = ext_gcd(a, field_->minimal_polynomial());
  (void)v;
  if (g.size() != 1)
    throw Error("minimal polynomial is not irreducible: nontrivial gcd");
  auto inv = poly_mod(u, field_->minimal_polynomial());
  inv.resize(field_->degree(), Rational(0));
  return NFElem(field_, std::move(inv));
}

NFElem& NFElem::operator/=(const NFElem& rhs) {
  check_same_field(*this, rhs);
  return *this *= rhs.inverse();
}

bool operator==(const NFElem& a, const NFElem& b) {
  check_same_field(a, b);
  return a.coords_ == b.coords_;
}

NFElem NFElem::pow(long e) const {
  NFElem base = e >= 0 ? *this : inverse();
  long n = e >= 0 ? e : -e;
  NFElem out = NFElem::one(field_);
  while (n > 0) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

NFElem NFElem::map_generator(const NFElem& gen_image) const {
  check_same_field(*this, gen_image);
  NFElem out = NFElem::zero(field_);
  for (size_t i = coords_.size(); i-- > 0;) {
    out *= gen_image;
    out += NFElem::from_rational(field_, coords_[i]);
  }
  return out;
}

std::string NFElem::str() const {
  return polynomial_to_string(coords_, field_->generator_name());
}

NFElem nf_arith(const NFElem& a, const NFElem& b, NFOp op) {
  switch (op) {
    case NFOp::Add: return a + b;
    case NFOp::Sub: return a - b;
    case NFOp::Mul: return a * b;
    case NFOp::Div: return a / b;
  }
  throw Error("unknown op");
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Integer read_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer at '" + s.substr(start) + "'");
    return Integer(s.substr(start, pos - start));
  }
  std::string read_identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

std::vector<Rational> parse_polynomial(const std::string& text,
                                       const std::string& var) {
  Lexer lx{text};
  std::vector<Rational> coeffs;
  auto add_term = [&](const Rational& c, long exp) {
    if (exp < 0) throw ParseError("negative exponent in polynomial");
    if (coeffs.size() <= static_cast<size_t>(exp))
      coeffs.resize(exp + 1, Rational(0));
    coeffs[exp] += c;
  };

  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    while (lx.accept('-')) sign = -sign;
    first = false;

    Rational coef(sign);
    long exp = 0;
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = lx.read_integer();
        if (lx.accept('/')) {
          Integer den = lx.read_integer();
          if (den == 0) throw ParseError("zero denominator");
          coef *= Rational(num, den);
        } else {
          coef *= Rational(num);
        }
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id = lx.read_identifier();
        if (id != var)
          throw ParseError("unknown symbol '" + id + "' (expected '" + var +
                           "')");
        long e = 1;
        if (lx.accept('^'))
          e = static_cast<long>(lx.read_integer().convert_to<long long>());
        exp += e;
        saw_factor = true;
      } else {
        break;
      }
      if (!lx.accept('*')) break;
    }
    if (!saw_factor) throw ParseError("empty term in '" + text + "'");
    add_term(coef, exp);
  }
  if (coeffs.empty()) coeffs.push_back(Rational(0));
  return coeffs;
}

std::string polynomial_to_string(const std::vector<Rational>& coeffs,
                                 const std::string& var) {
  std::ostringstream os;
  bool any = false;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!any) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    any = true;
    if (k == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (!any) return "0";
  return os.str();
}

NFElem parse_element(const FieldPtr& field, const std::string& text) {
  // Identify which variable the text uses: the field generator or "x".
  std::string var = field->generator_name();
  for (size_t i = 0; i < text.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      var = text.substr(i, j - i);
      break;
    }
  }
  if (var != field->generator_name() && var != "x")
    throw ParseError("element uses symbol '" + var + "', expected '" +
                     field->generator_name() + "'");
  auto coeffs = parse_polynomial(text, var);
  auto reduced = poly_mod(std::move(coeffs), field->minimal_polynomial());
  reduced.resize(field->degree(), Rational(0));
  return NFElem(field, std::move(reduced));
}

FieldPtr NumberField::parse_header(const std::string& line) {
  // Expected: "field: NAME; minpoly: POLY[; gen: NAME]"
  std::string name, minpoly, gen = "a";
  std::istringstream parts(line);
  std::string piece;
  bool saw_field = false, saw_minpoly = false;
  while (std::getline(parts, piece, ';')) {
    auto colon = piece.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value' in field header: " + piece);
    std::string key = piece.substr(0, colon);
    std::string value = piece.substr(colon + 1);
    auto trim = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    };
    trim(key);
    trim(value);
    if (key == "field") {
      name = value;
      saw_field = true;
    } else if (key == "minpoly") {
      minpoly = value;
      saw_minpoly = true;
    } else if (key == "gen") {
      gen = value;
    } else {
      throw ParseError("unknown key '" + key + "' in field header");
    }
  }
  if (!saw_field || !saw_minpoly)
    throw ParseError("field header needs 'field:' and 'minpoly:' parts");
  auto coeffs = parse_polynomial(minpoly, "x");
  if (coeffs.size() < 2)
    throw ParseError("minimal polynomial must have degree >= 1");
  if (coeffs.back() != 1) throw ParseError("minimal polynomial must be monic");
  return NumberField::make(name, std::move(coeffs), gen);
}

}  // namespace oneloop
