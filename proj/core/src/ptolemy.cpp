#include "oneloop/ptolemy.hpp"

namespace oneloop {

namespace {

// Shared propagation over plain values or duals. Element needs unary minus,
// the arithmetic operators and an is_zero test via `zero_check`.
template <class Element, class ZeroCheck>
void propagate_layers(std::vector<Element>& vals,
                      const LayeredTriangulation& L,
                      const ObstructionData& obs, ZeroCheck&& is_zero) {
  auto slot = [&](const SignedVar& s) {
    Element v = vals[s.var];
    return s.sign < 0 ? -v : v;
  };
  for (const auto& layer : L.layers()) {
    const LayerSigns& signs = obs.layer(layer.index - 1);
    Element m2 = slot(layer.ea) * slot(layer.ec);
    Element m3 = slot(layer.eb) * slot(layer.ed);
    if (signs.ptolemy[1] < 0) m2 = -m2;
    if (signs.ptolemy[2] < 0) m3 = -m3;
    Element bottom = slot(layer.bottom);
    if (signs.ptolemy[0] < 0) bottom = -bottom;
    Element top = (m2 - m3) / bottom;
    if (is_zero(top))
      throw DegenerateAssignment("propagated value c" +
                                 std::to_string(layer.top_var) + " is zero");
    vals.push_back(std::move(top));
  }
}

void check_initial(const std::vector<NFElem>& initial,
                   const LayeredTriangulation& L) {
  if (static_cast<int>(initial.size()) != 3 * L.n())
    throw Error("expected " + std::to_string(3 * L.n()) +
                " initial Ptolemy values, got " +
                std::to_string(initial.size()));
  for (size_t j = 0; j < initial.size(); ++j)
    if (initial[j].is_zero())
      throw DegenerateAssignment("initial value c" + std::to_string(j) +
                                 " is zero");
}

}  // namespace

PtolemyState propagate_c(const std::vector<NFElem>& initial,
                         const LayeredTriangulation& L,
                         const ObstructionData& obs) {
  check_initial(initial, L);
  PtolemyState state{initial[0].field(), initial, obs};
  state.values.reserve(L.num_edge_vars());
  propagate_layers(state.values, L, obs,
                   [](const NFElem& v) { return v.is_zero(); });
  return state;
}

std::vector<Dual> propagate_c_dual(const std::vector<NFElem>& initial,
                                   const LayeredTriangulation& L,
                                   const ObstructionData& obs) {
  check_initial(initial, L);
  const size_t n3 = initial.size();
  std::vector<Dual> vals;
  vals.reserve(L.num_edge_vars());
  for (size_t j = 0; j < n3; ++j)
    vals.push_back(Dual::variable(initial[j], n3, j));
  propagate_layers(vals, L, obs,
                   [](const Dual& v) { return v.value.is_zero(); });
  return vals;
}

ThetaState propagate_theta(const PtolemyState& state,
                           const std::vector<NFElem>& initial_theta,
                           const LayeredTriangulation& L) {
  if (static_cast<int>(initial_theta.size()) != 2 * L.n())
    throw Error("expected " + std::to_string(2 * L.n()) +
                " initial theta values, got " +
                std::to_string(initial_theta.size()));
  auto slot = [&](const SignedVar& s) {
    NFElem v = state.values[s.var];
    return s.sign < 0 ? -v : v;
  };
  ThetaState theta{initial_theta};
  theta.values.reserve(L.num_face_vars());
  for (const auto& layer : L.layers()) {
    const LayerSigns& signs = state.obstruction.layer(layer.index - 1);
    const NFElem top = state.values[layer.top_var];
    const NFElem& th_alpha = theta.values[layer.alpha_face];
    const NFElem& th_beta = theta.values[layer.beta_face];
    // c_T th_a - ga c(d) th_alpha - gb c(a) th_beta = 0
    NFElem num_a = slot(layer.ed) * th_alpha;
    if (signs.face_a_eq[0] < 0) num_a = -num_a;
    NFElem part_a = slot(layer.ea) * th_beta;
    if (signs.face_a_eq[1] < 0) part_a = -part_a;
    NFElem th_a = (num_a + part_a) / top;
    // c_T th_b + ga c(c) th_alpha + gb c(b) th_beta = 0
    NFElem num_b = slot(layer.ec) * th_alpha;
    if (signs.face_b_eq[0] < 0) num_b = -num_b;
    NFElem part_b = slot(layer.eb) * th_beta;
    if (signs.face_b_eq[1] < 0) part_b = -part_b;
    NFElem th_b = -(num_b + part_b) / top;
    theta.values.push_back(std::move(th_a));
    theta.values.push_back(std::move(th_b));
  }
  return theta;
}

std::vector<NFElem> closure_residual_c(const PtolemyState& state,
                                       const LayeredTriangulation& L) {
  std::vector<NFElem> out;
  out.reserve(3 * L.n());
  for (int j = 0; j < 3 * L.n(); ++j) {
    const SignedVar& t = L.closure().edges[j];
    NFElem image = state.values[t.var];
    if (t.sign < 0) image = -image;
    out.push_back(image - state.values[j]);
  }
  return out;
}

std::vector<NFElem> closure_residual_theta(const PtolemyState& state,
                                           const ThetaState& theta,
                                           const LayeredTriangulation& L) {
  std::vector<NFElem> out;
  out.reserve(2 * L.n());
  for (int j = 0; j < 2 * L.n(); ++j) {
    NFElem image = theta.values[L.closure().faces[j]];
    if (state.obstruction.closure_face_sign(j) < 0) image = -image;
    out.push_back(image - theta.values[j]);
  }
  return out;
}

std::vector<NFElem> scaling_act(const std::vector<NFElem>& initial,
                                const NFElem& k, const std::vector<int>& d) {
  if (k.is_zero()) throw ZeroScalar();
  if (d.size() != initial.size())
    throw Error("exponent vector length does not match value count");
  std::vector<NFElem> out;
  out.reserve(initial.size());
  for (size_t j = 0; j < initial.size(); ++j) {
    if (d[j] < 0 || d[j] > 2)
      throw Error("puncture-incidence exponents must lie in {0, 1, 2}");
    out.push_back(initial[j] * k.pow(d[j]));
  }
  return out;
}

std::vector<int> puncture_exponents(const SurfaceTriangulation& surface,
                                    int puncture) {
  std::vector<int> d(surface.num_edges());
  for (int j = 0; j < surface.num_edges(); ++j)
    d[j] = surface.puncture_incidence(puncture, j);
  return d;
}

Matrix<NFElem> ptolemy_jacobian(const std::vector<NFElem>& initial,
                                const LayeredTriangulation& L,
                                const ObstructionData& obs) {
  const int n3 = 3 * L.n();
  auto duals = propagate_c_dual(initial, L, obs);
  const FieldPtr field = initial[0].field();
  Matrix<NFElem> jac(n3, n3, NFElem::zero(field));
  for (int i = 0; i < n3; ++i) {
    const SignedVar& t = L.closure().edges[i];
    for (int j = 0; j < n3; ++j) {
      NFElem entry = duals[t.var].partials[j];
      if (t.sign < 0) entry = -entry;
      jac.at(i, j) = std::move(entry);
    }
  }
  return jac;
}

Matrix<NFElem> theta_monodromy_matrix(const PtolemyState& state,
                                      const LayeredTriangulation& L) {
  const int n2 = 2 * L.n();
  const FieldPtr field = state.field;
  Matrix<NFElem> m(n2, n2, NFElem::zero(field));
  for (int k = 0; k < n2; ++k) {
    std::vector<NFElem> basis(n2, NFElem::zero(field));
    basis[k] = NFElem::one(field);
    ThetaState theta = propagate_theta(state, basis, L);
    for (int j = 0; j < n2; ++j) {
      NFElem image = theta.values[L.closure().faces[j]];
      if (state.obstruction.closure_face_sign(j) < 0) image = -image;
      m.at(j, k) = std::move(image);
    }
  }
  return m;
}

}  // namespace oneloop
