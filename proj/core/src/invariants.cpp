#include "oneloop/invariants.hpp"

namespace oneloop {

std::string method_name(Method m) {
  return m == Method::FullMatrix ? "full_matrix" : "reduced_jacobian";
}

namespace {

PtolemyState checked_state(const std::vector<NFElem>& initial_c,
                           const LayeredTriangulation& L,
                           const ObstructionData& obs) {
  PtolemyState state = propagate_c(initial_c, L, obs);
  auto residual = closure_residual_c(state, L);
  for (size_t j = 0; j < residual.size(); ++j)
    if (!residual[j].is_zero())
      throw ResidualNonzero("c'_" + std::to_string(j) + " - c_" +
                            std::to_string(j) + " = " + residual[j].str());
  return state;
}

}  // namespace

TorsionResult torsion3_reduced(const std::vector<NFElem>& initial_c,
                               const LayeredTriangulation& L,
                               const ObstructionData& obs) {
  checked_state(initial_c, L, obs);
  Matrix<NFElem> jac = ptolemy_jacobian(initial_c, L, obs);
  return TorsionResult{3, Method::ReducedJacobian,
                       normalize_loop(char_poly(jac)), obs.summary()};
}

TorsionResult torsion2_reduced(const std::vector<NFElem>& initial_c,
                               const LayeredTriangulation& L,
                               const ObstructionData& obs) {
  PtolemyState state = checked_state(initial_c, L, obs);
  Matrix<NFElem> m = theta_monodromy_matrix(state, L);
  return TorsionResult{2, Method::ReducedJacobian,
                       normalize_loop(char_poly(m)), obs.summary()};
}

TorsionResult oneloop3_full(const std::vector<NFElem>& initial_c,
                            const LayeredTriangulation& L,
                            const ObstructionData& obs) {
  PtolemyState state = checked_state(initial_c, L, obs);
  const FieldPtr field = state.field;
  const int n3 = 3 * L.n();
  const int size = L.num_edge_vars();
  Matrix<LaurentPolynomial> m(size, size, LaurentPolynomial(field));

  // Rows Q_j = t c_j - c'_j; here c'_j is literally one signed variable.
  for (int j = 0; j < n3; ++j) {
    m.at(j, j).add_term(1, NFElem::one(field));
    const SignedVar& t = L.closure().edges[j];
    m.at(j, t.var).add_term(
        0, NFElem::from_rational(field, Rational(-t.sign)));
  }

  // Rows dP'_i/dc_j with P'_i = P_i / c_{B(i)}; at a solution P_i = 0 this
  // is just the derivative of P_i scaled by the bottom value.
  for (const auto& layer : L.layers()) {
    const int row = n3 + layer.index - 1;
    const LayerSigns& signs = obs.layer(layer.index - 1);
    NFElem bottom_value = state.values[layer.bottom.var];
    if (layer.bottom.sign < 0) bottom_value = -bottom_value;

    auto add_monomial = [&](int coeff_sign, const SignedVar& u,
                            const SignedVar& v) {
      Rational c(coeff_sign * u.sign * v.sign);
      NFElem scale = NFElem::from_rational(field, c) / bottom_value;
      m.at(row, u.var).add_term(0, scale * state.values[v.var]);
      m.at(row, v.var).add_term(0, scale * state.values[u.var]);
    };
    SignedVar top{layer.top_var, +1};
    add_monomial(signs.ptolemy[0], top, layer.bottom);
    add_monomial(-signs.ptolemy[1], layer.ea, layer.ec);
    add_monomial(signs.ptolemy[2], layer.eb, layer.ed);
  }

  return TorsionResult{3, Method::FullMatrix, normalize_loop(det_laurent(m)),
                       obs.summary()};
}

TorsionResult oneloop2_full(const std::vector<NFElem>& initial_c,
                            const LayeredTriangulation& L,
                            const ObstructionData& obs) {
  PtolemyState state = checked_state(initial_c, L, obs);
  const FieldPtr field = state.field;
  const int n2 = 2 * L.n();
  const int size = L.num_face_vars();
  Matrix<LaurentPolynomial> m(size, size, LaurentPolynomial(field));

  // Rows F_j = t theta_j - theta'_j.
  for (int j = 0; j < n2; ++j) {
    m.at(j, j).add_term(1, NFElem::one(field));
    const int target = L.closure().faces[j];
    const int sign = obs.closure_face_sign(j);
    m.at(j, target).add_term(0,
                             NFElem::from_rational(field, Rational(-sign)));
  }

  // Rows dE'_k/dtheta with E' = E / c_{T(i)}, two per layer in the order
  // matching face_equations(): the theta(face_b) equation first.
  auto slot_value = [&](const SignedVar& s) {
    NFElem v = state.values[s.var];
    return s.sign < 0 ? -v : v;
  };
  for (const auto& layer : L.layers()) {
    const int row_b = n2 + 2 * (layer.index - 1);
    const int row_a = row_b + 1;
    const LayerSigns& signs = obs.layer(layer.index - 1);
    const NFElem top = state.values[layer.top_var];

    // c_T th_b + ga c(c) th_alpha + gb c(b) th_beta = 0
    m.at(row_b, layer.face_b).add_term(0, NFElem::one(field));
    NFElem cb_alpha = slot_value(layer.ec) / top;
    if (signs.face_b_eq[0] < 0) cb_alpha = -cb_alpha;
    m.at(row_b, layer.alpha_face).add_term(0, cb_alpha);
    NFElem cb_beta = slot_value(layer.eb) / top;
    if (signs.face_b_eq[1] < 0) cb_beta = -cb_beta;
    m.at(row_b, layer.beta_face).add_term(0, cb_beta);

    // c_T th_a - ga c(d) th_alpha - gb c(a) th_beta = 0
    m.at(row_a, layer.face_a).add_term(0, NFElem::one(field));
    NFElem ca_alpha = -(slot_value(layer.ed) / top);
    if (signs.face_a_eq[0] < 0) ca_alpha = -ca_alpha;
    m.at(row_a, layer.alpha_face).add_term(0, ca_alpha);
    NFElem ca_beta = -(slot_value(layer.ea) / top);
    if (signs.face_a_eq[1] < 0) ca_beta = -ca_beta;
    m.at(row_a, layer.beta_face).add_term(0, ca_beta);
  }

  return TorsionResult{2, Method::FullMatrix, normalize_loop(det_laurent(m)),
                       obs.summary()};
}

Rational norm_lower_bound(const LaurentPolynomial& p, int n) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (n < 1) throw Error("n must be positive");
  return Rational(p.span(), n);
}

}  // namespace oneloop
