#include "oneloop/determinant.hpp"

namespace oneloop {

NFElem det_field(const Matrix<NFElem>& m) {
  if (!m.square()) throw NonSquare();
  const size_t n = m.rows();
  if (n == 0) throw NonSquare();
  const FieldPtr field = m.at(0, 0).field();
  Matrix<NFElem> a = m;
  NFElem prev_pivot = NFElem::one(field);
  int sign = 1;

  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return NFElem::zero(field);
    if (pivot != k) {
      for (size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    // One-step Bareiss update; the division by the previous pivot is exact.
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) /
                     prev_pivot;
      }
      a.at(i, k) = NFElem::zero(field);
    }
    prev_pivot = a.at(k, k);
  }
  NFElem det = a.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

// Newton interpolation through (x_i, y_i) with distinct rational nodes.
std::vector<NFElem> newton_interpolate(const FieldPtr& field,
                                       const std::vector<Rational>& xs,
                                       const std::vector<NFElem>& ys) {
  const size_t n = xs.size();
  std::vector<NFElem> divided = ys;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      NFElem dx = NFElem::from_rational(field, xs[i] - xs[i - level]);
      divided[i] = (divided[i] - divided[i - 1]) / dx;
      if (i == level) break;
    }
  }
  // Expand the Newton form into dense monomial coefficients.
  std::vector<NFElem> coeffs(n, NFElem::zero(field));
  std::vector<NFElem> basis{NFElem::one(field)};  // prod (x - x_j), dense
  coeffs[0] = divided[0];
  for (size_t i = 1; i < n; ++i) {
    // basis *= (x - x_{i-1})
    std::vector<NFElem> next(basis.size() + 1, NFElem::zero(field));
    NFElem root = NFElem::from_rational(field, xs[i - 1]);
    for (size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * root;
    }
    basis = std::move(next);
    for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += divided[i] * basis[j];
  }
  return coeffs;
}

}  // namespace

LaurentPolynomial det_laurent(const Matrix<LaurentPolynomial>& m) {
  if (!m.square()) throw NonSquare();
  const size_t n = m.rows();
  if (n == 0) throw NonSquare();
  const FieldPtr field = m.at(0, 0).field();

  long total_shift = 0;
  long degree_bound = 0;
  for (size_t r = 0; r < n; ++r) {
    long row_min = 0, row_max = 0;
    bool any = false;
    for (size_t c = 0; c < n; ++c) {
      const auto& p = m.at(r, c);
      if (p.is_zero()) continue;
      if (!any) {
        row_min = p.min_exp();
        row_max = p.max_exp();
        any = true;
      } else {
        row_min = std::min(row_min, p.min_exp());
        row_max = std::max(row_max, p.max_exp());
      }
    }
    if (!any) return LaurentPolynomial(field);  // a zero row
    total_shift += row_min;
    degree_bound += row_max - row_min;
  }

  const long num_nodes = degree_bound + 1;
  std::vector<Rational> xs;
  std::vector<NFElem> ys;
  xs.reserve(num_nodes);
  ys.reserve(num_nodes);
  for (long node = 0; node < num_nodes; ++node) {
    xs.emplace_back(node);
    NFElem t_value = NFElem::from_rational(field, Rational(node));
    Matrix<NFElem> scalar(n, n, NFElem::zero(field));
    for (size_t r = 0; r < n; ++r) {
      long row_min = 0;
      bool any = false;
      for (size_t c = 0; c < n; ++c) {
        const auto& p = m.at(r, c);
        if (p.is_zero()) continue;
        row_min = any ? std::min(row_min, p.min_exp()) : p.min_exp();
        any = true;
      }
      for (size_t c = 0; c < n; ++c) {
        const auto& p = m.at(r, c);
        if (p.is_zero()) continue;
        scalar.at(r, c) = p.shifted(-row_min).eval(t_value);
      }
    }
    ys.push_back(det_field(scalar));
  }

  auto coeffs = newton_interpolate(field, xs, ys);
  LaurentPolynomial det(field);
  for (size_t k = 0; k < coeffs.size(); ++k)
    det.add_term(static_cast<long>(k) + total_shift, coeffs[k]);
  return det;
}

LaurentPolynomial char_poly(const Matrix<NFElem>& a) {
  if (!a.square()) throw NonSquare();
  const size_t n = a.rows();
  const FieldPtr field = a.at(0, 0).field();
  Matrix<LaurentPolynomial> m(n, n, LaurentPolynomial(field));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      LaurentPolynomial entry = LaurentPolynomial::constant(-a.at(i, j));
      if (i == j) entry.add_term(1, NFElem::one(field));
      m.at(i, j) = std::move(entry);
    }
  return det_laurent(m);
}

}  // namespace oneloop
