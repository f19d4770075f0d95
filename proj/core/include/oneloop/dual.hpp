#pragma once

#include <functional>
#include <vector>

#include "oneloop/number_field.hpp"

namespace oneloop {

// Forward-mode dual over a number field: a value together with its exact
// partial derivatives with respect to a fixed set of active variables.
struct Dual {
  NFElem value;
  std::vector<NFElem> partials;

  Dual(NFElem v, std::vector<NFElem> p)
      : value(std::move(v)), partials(std::move(p)) {}

  static Dual constant(const NFElem& v, size_t n_active) {
    return Dual(v, std::vector<NFElem>(n_active, NFElem::zero(v.field())));
  }
  static Dual variable(const NFElem& v, size_t n_active, size_t index) {
    std::vector<NFElem> p(n_active, NFElem::zero(v.field()));
    p[index] = NFElem::one(v.field());
    return Dual(v, std::move(p));
  }

  Dual operator-() const {
    std::vector<NFElem> p;
    p.reserve(partials.size());
    for (const auto& x : partials) p.push_back(-x);
    return Dual(-value, std::move(p));
  }

  Dual& operator+=(const Dual& rhs) {
    value += rhs.value;
    for (size_t i = 0; i < partials.size(); ++i) partials[i] += rhs.partials[i];
    return *this;
  }
  Dual& operator-=(const Dual& rhs) {
    value -= rhs.value;
    for (size_t i = 0; i < partials.size(); ++i) partials[i] -= rhs.partials[i];
    return *this;
  }
  Dual& operator*=(const Dual& rhs) {
    for (size_t i = 0; i < partials.size(); ++i)
      partials[i] = partials[i] * rhs.value + value * rhs.partials[i];
    value *= rhs.value;
    return *this;
  }
  Dual& operator/=(const Dual& rhs) {
    if (rhs.value.is_zero()) throw DivisionByZero();
    value /= rhs.value;
    // (u/v)' = (u' - (u/v) v') / v
    for (size_t i = 0; i < partials.size(); ++i)
      partials[i] = (partials[i] - value * rhs.partials[i]) / rhs.value;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
};

// Evaluates an arithmetic circuit with exact forward-mode differentiation
// with respect to the variables listed in `active`.
inline Dual dual_eval(
    const std::function<Dual(const std::vector<Dual>&)>& circuit,
    const std::vector<NFElem>& point, const std::vector<size_t>& active) {
  std::vector<Dual> inputs;
  inputs.reserve(point.size());
  for (size_t j = 0; j < point.size(); ++j) {
    size_t pos = active.size();
    for (size_t k = 0; k < active.size(); ++k)
      if (active[k] == j) {
        pos = k;
        break;
      }
    if (pos < active.size())
      inputs.push_back(Dual::variable(point[j], active.size(), pos));
    else
      inputs.push_back(Dual::constant(point[j], active.size()));
  }
  return circuit(inputs);
}

}  // namespace oneloop
