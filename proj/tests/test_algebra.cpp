#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oneloop/number_field.hpp"

using namespace oneloop;
using testutil::alpha_field;
using testutil::beta_field;
using testutil::random_element;
using testutil::random_nonzero_element;

TEST_CASE("generator satisfies its minimal polynomial") {
  auto K = beta_field();
  NFElem b = NFElem::generator(K);
  // b^2 = 2b + 1
  CHECK(b * b == NFElem::from_rational(K, 2) * b + NFElem::one(K));
}

TEST_CASE("multiplication agrees with schoolbook multiply-then-reduce") {
  auto K = beta_field();
  NFElem b = NFElem::generator(K);
  NFElem two = NFElem::from_rational(K, 2);
  // (b - 2) * b = b^2 - 2b = 1
  CHECK((b - two) * b == NFElem::one(K));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    NFElem x = random_element(K, rng);
    NFElem y = random_element(K, rng);
    // coords (x0 + x1 b)(y0 + y1 b) = x0 y0 + (x0 y1 + x1 y0) b + x1 y1 b^2
    // with b^2 = 2b + 1.
    const auto& xc = x.coords();
    const auto& yc = y.coords();
    Rational c0 = xc[0] * yc[0] + xc[1] * yc[1];
    Rational c1 = xc[0] * yc[1] + xc[1] * yc[0] + Rational(2) * xc[1] * yc[1];
    CHECK((x * y).coords() == std::vector<Rational>{c0, c1});
  }
}

TEST_CASE("multiplicative identity") {
  auto K = alpha_field();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    NFElem x = random_element(K, rng);
    CHECK(x * NFElem::one(K) == x);
  }
}

TEST_CASE("field axioms on random samples in both fixture fields") {
  std::mt19937 rng(3);
  for (const auto& K : {beta_field(), alpha_field()}) {
    for (int trial = 0; trial < 40; ++trial) {
      NFElem x = random_element(K, rng);
      NFElem y = random_element(K, rng);
      NFElem z = random_element(K, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      if (!x.is_zero()) CHECK(x * x.inverse() == NFElem::one(K));
    }
  }
}

TEST_CASE("division returns the unique quotient") {
  auto K = alpha_field();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    NFElem a = random_element(K, rng);
    NFElem b = random_nonzero_element(K, rng);
    NFElem q = nf_arith(a, b, NFOp::Div);
    CHECK(b * q == a);
  }
}

TEST_CASE("division by zero and field mismatch raise") {
  auto K = beta_field();
  auto L = alpha_field();
  NFElem x = NFElem::one(K);
  CHECK_THROWS_AS(x / NFElem::zero(K), DivisionByZero);
  CHECK_THROWS_AS(x + NFElem::one(L), FieldMismatch);
}

TEST_CASE("pow handles negative exponents") {
  auto K = beta_field();
  NFElem b = NFElem::generator(K);
  CHECK(b.pow(0) == NFElem::one(K));
  CHECK(b.pow(3) == b * b * b);
  CHECK(b.pow(-2) * b.pow(2) == NFElem::one(K));
}

TEST_CASE("map_generator realizes the conjugation automorphism") {
  auto K = beta_field();
  NFElem b = NFElem::generator(K);
  NFElem conj = NFElem::from_rational(K, 2) - b;  // the other root
  // f(conj) = 0
  CHECK(conj * conj - NFElem::from_rational(K, 2) * conj - NFElem::one(K) ==
        NFElem::zero(K));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    NFElem x = random_element(K, rng);
    NFElem y = random_element(K, rng);
    CHECK((x * y).map_generator(conj) ==
          x.map_generator(conj) * y.map_generator(conj));
    CHECK((x + y).map_generator(conj) ==
          x.map_generator(conj) + y.map_generator(conj));
  }
}

TEST_CASE("element parsing and printing round-trip") {
  auto K = alpha_field();
  NFElem e = parse_element(K, "-a - a^2");
  CHECK(e.coords() == std::vector<Rational>{Rational(0), Rational(-1),
                                            Rational(-1)});
  CHECK(e.str() == "-a - a^2");
  CHECK(parse_element(K, e.str()) == e);
  CHECK(parse_element(K, "3/2 - 2*a^2") ==
        NFElem(K, {Rational(3, 2), Rational(0), Rational(-2)}));
  // powers above the degree reduce
  CHECK(parse_element(K, "a^3") ==
        NFElem(K, {Rational(1), Rational(-1), Rational(-1)}));
  CHECK_THROWS_AS(parse_element(K, "q + 1"), ParseError);
}

TEST_CASE("field header round-trip") {
  auto K = NumberField::parse_header("field: K; minpoly: x^3 + x^2 + x - 1; gen: a");
  CHECK(K->degree() == 3);
  CHECK(K->generator_name() == "a");
  auto K2 = NumberField::parse_header(K->header());
  CHECK(K->same_as(*K2));
  CHECK_THROWS_AS(NumberField::parse_header("field: K; minpoly: 2*x^2 - 1"),
                  ParseError);
  CHECK_THROWS_AS(NumberField::parse_header("minpoly: x^2 - 2"), ParseError);
}

TEST_CASE("laurent arithmetic basics") {
  auto K = beta_field();
  LaurentPolynomial t = LaurentPolynomial::t(K);
  LaurentPolynomial one = LaurentPolynomial::constant(NFElem::one(K));
  CHECK((t - one) * (t + one) == t * t - one);
  std::mt19937 rng(5);
  LaurentPolynomial p = testutil::random_laurent(K, rng);
  CHECK(laurent_arith(p, one, LaurentOp::Mul) == p);
}

TEST_CASE("laurent products match the convolution oracle") {
  auto K = beta_field();
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    LaurentPolynomial p = testutil::random_laurent(K, rng, 0, 5);
    LaurentPolynomial q = testutil::random_laurent(K, rng, 0, 5);
    LaurentPolynomial prod = p * q;
    if (p.is_zero() || q.is_zero()) {
      CHECK(prod.is_zero());
      continue;
    }
    for (long k = 0; k <= 10; ++k) {
      NFElem conv = NFElem::zero(K);
      for (long i = 0; i <= k; ++i) conv += p.coeff(i) * q.coeff(k - i);
      CHECK(prod.coeff(k) == conv);
    }
  }
}

TEST_CASE("normalize_loop forced examples") {
  auto K = beta_field();
  // -t^3 + t^5 -> 1 - t^2
  LaurentPolynomial p(K);
  p.add_term(3, NFElem::from_rational(K, -1));
  p.add_term(5, NFElem::one(K));
  LaurentPolynomial expected(K);
  expected.add_term(0, NFElem::one(K));
  expected.add_term(2, NFElem::from_rational(K, -1));
  CHECK(normalize_loop(p) == expected);

  // 1 - 2t + t^2 + t^4 - 2t^5 + t^6 is already normal
  LaurentPolynomial q(K);
  for (auto [e, c] : {std::pair<long, int>{0, 1}, {1, -2}, {2, 1},
                      {4, 1}, {5, -2}, {6, 1}})
    q.add_term(e, NFElem::from_rational(K, c));
  CHECK(normalize_loop(q) == q);

  CHECK_THROWS_AS(normalize_loop(LaurentPolynomial(K)), ZeroPolynomial);
}

TEST_CASE("normalize_loop is constant on unit orbits and idempotent") {
  auto K = alpha_field();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> shift(-6, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPolynomial p = testutil::random_laurent(K, rng);
    if (p.is_zero()) continue;
    LaurentPolynomial n = normalize_loop(p);
    CHECK(normalize_loop(n) == n);
    LaurentPolynomial moved = p.shifted(shift(rng));
    if (coin(rng)) moved = -moved;
    CHECK(normalize_loop(moved) == n);
  }
}

TEST_CASE("loop_equal") {
  auto K = beta_field();
  LaurentPolynomial t = LaurentPolynomial::t(K);
  LaurentPolynomial one = LaurentPolynomial::constant(NFElem::one(K));
  LaurentPolynomial p = t * t - one;
  LaurentPolynomial q = t * t + one;
  CHECK(loop_equal(p, -(p.shifted(7))));
  CHECK_FALSE(loop_equal(p, q));
  CHECK(loop_equal(LaurentPolynomial(K), LaurentPolynomial(K)));
  CHECK_FALSE(loop_equal(LaurentPolynomial(K), p));
}

TEST_CASE("laurent evaluation honors negative exponents") {
  auto K = beta_field();
  LaurentPolynomial p(K);
  p.add_term(-2, NFElem::one(K));
  p.add_term(1, NFElem::from_rational(K, 3));
  NFElem two = NFElem::from_rational(K, 2);
  CHECK(p.eval(two) ==
        NFElem::from_rational(K, Rational(1, 4)) + NFElem::from_rational(K, 6));
}
