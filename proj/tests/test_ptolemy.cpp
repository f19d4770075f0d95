#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oneloop/fixtures.hpp"
#include "oneloop/ptolemy.hpp"
#include "oneloop/solution_io.hpp"

using namespace oneloop;
using testutil::random_nonzero_element;

namespace {

LayeredTriangulation m036() {
  return build_layered(parse_monodromy(fixtures::kM036Monodromy));
}

bool all_zero(const std::vector<NFElem>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const NFElem& e) { return e.is_zero(); });
}

}  // namespace

TEST_CASE("m036 trivial class: propagated values and zero residual") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  REQUIRE(state.values.size() == 13);
  auto K = sol.field;
  NFElem b = NFElem::generator(K);
  // c9 = (c2 c6 + c4 c7)/c8 etc., evaluated on the fixture
  CHECK(state.values[9] == b - NFElem::from_rational(K, 2));
  CHECK(state.values[10] == b);
  CHECK(state.values[11] == NFElem::one(K) - b);
  CHECK(state.values[12] == NFElem::one(K));
  CHECK(all_zero(closure_residual_c(state, L)));
}

TEST_CASE("m036 signed class: propagated values and zero residual") {
  LayeredTriangulation L = m036();
  ObstructionData obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  SolutionFile sol = parse_solution(fixtures::kM036SignedSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  auto K = sol.field;
  NFElem a = NFElem::generator(K);
  CHECK(state.values[9] == -a);
  CHECK(state.values[10] == a);
  CHECK(state.values[11] == -a - a * a);
  CHECK(state.values[12] == NFElem::one(K));
  CHECK(all_zero(closure_residual_c(state, L)));
}

TEST_CASE("the trivial solution fails under the signed obstruction") {
  LayeredTriangulation L = m036();
  ObstructionData obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  CHECK_FALSE(all_zero(closure_residual_c(state, L)));
}

TEST_CASE("residuals: ray membership matters, uniform rescaling does not") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  auto K = sol.field;

  // All equations are homogeneous, so the whole ray solves the closure.
  NFElem k = NFElem::generator(K) + NFElem::from_rational(K, 3);
  std::vector<NFElem> rescaled;
  for (const auto& v : sol.c) rescaled.push_back(v * k);
  CHECK(all_zero(closure_residual_c(propagate_c(rescaled, L, obs), L)));

  // Off the ray the residual is nonzero: constant values, or a single
  // perturbed coordinate.
  std::vector<NFElem> constant(9, k);
  CHECK_FALSE(all_zero(closure_residual_c(propagate_c(constant, L, obs), L)));
  std::vector<NFElem> bumped = sol.c;
  bumped[0] = bumped[0] + NFElem::one(K);
  CHECK_FALSE(all_zero(closure_residual_c(propagate_c(bumped, L, obs), L)));

  std::mt19937 rng(3);
  std::vector<NFElem> random_values;
  for (int i = 0; i < 9; ++i)
    random_values.push_back(random_nonzero_element(K, rng));
  CHECK_FALSE(
      all_zero(closure_residual_c(propagate_c(random_values, L, obs), L)));
}

TEST_CASE("degenerate propagation aborts") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  auto K = testutil::beta_field();
  // c2 c6 + c4 c7 = 0 makes the first propagated value vanish
  std::vector<NFElem> values;
  for (int v : {1, 1, 1, 1, 1, 1, 1, -1, 1})
    values.push_back(NFElem::from_rational(K, v));
  CHECK_THROWS_AS(propagate_c(values, L, obs), DegenerateAssignment);
  // zero initial values are rejected outright
  std::vector<NFElem> zeros(9, NFElem::zero(K));
  CHECK_THROWS_AS(propagate_c(zeros, L, obs), DegenerateAssignment);
}

TEST_CASE("theta propagation follows the solved face equations") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  auto K = sol.field;
  std::mt19937 rng(17);
  std::vector<NFElem> theta0;
  for (int i = 0; i < 6; ++i) theta0.push_back(testutil::random_element(K, rng));
  ThetaState theta = propagate_theta(state, theta0, L);
  REQUIRE(theta.values.size() == 14);
  const auto& c = state.values;
  // theta_6 = (c6 th5 - c4 th0)/c9 and theta_7 = -(c7 th5 + c2 th0)/c9
  CHECK(theta.values[6] == (c[6] * theta0[5] - c[4] * theta0[0]) / c[9]);
  CHECK(theta.values[7] == -(c[7] * theta0[5] + c[2] * theta0[0]) / c[9]);
}

TEST_CASE("theta propagation is linear and kills zero") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  auto K = sol.field;

  std::vector<NFElem> zeros(6, NFElem::zero(K));
  CHECK(all_zero(propagate_theta(state, zeros, L).values));

  std::mt19937 rng(23);
  std::vector<NFElem> u, v, sum;
  for (int i = 0; i < 6; ++i) {
    u.push_back(testutil::random_element(K, rng));
    v.push_back(testutil::random_element(K, rng));
    sum.push_back(u.back() + v.back());
  }
  ThetaState tu = propagate_theta(state, u, L);
  ThetaState tv = propagate_theta(state, v, L);
  ThetaState ts = propagate_theta(state, sum, L);
  for (size_t i = 0; i < ts.values.size(); ++i)
    CHECK(ts.values[i] == tu.values[i] + tv.values[i]);
}

TEST_CASE("scaling action basics") {
  LayeredTriangulation L = m036();
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  auto K = sol.field;
  std::vector<int> d = puncture_exponents(L.base(), 0);
  CHECK(d == std::vector<int>(9, 2));  // one puncture, both endpoints on it

  CHECK(scaling_act(sol.c, NFElem::one(K), d) == sol.c);
  CHECK_THROWS_AS(scaling_act(sol.c, NFElem::zero(K), d), ZeroScalar);
}

TEST_CASE("propagation is equivariant under the scaling action") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  auto K = sol.field;
  std::vector<int> d = puncture_exponents(L.base(), 0);
  std::mt19937 rng(29);
  NFElem k = random_nonzero_element(K, rng);

  PtolemyState plain = propagate_c(sol.c, L, obs);
  PtolemyState scaled = propagate_c(scaling_act(sol.c, k, d), L, obs);
  for (int j = 0; j < 9; ++j) {
    const SignedVar& t = L.closure().edges[j];
    NFElem lhs = scaled.values[t.var];
    NFElem rhs = plain.values[t.var] * k.pow(d[j]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("propagation commutes with the field automorphism") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  auto K = sol.field;
  NFElem conj = NFElem::from_rational(K, 2) - NFElem::generator(K);

  std::vector<NFElem> mapped;
  for (const auto& v : sol.c) mapped.push_back(v.map_generator(conj));
  PtolemyState state_mapped = propagate_c(mapped, L, obs);
  PtolemyState state = propagate_c(sol.c, L, obs);
  for (size_t i = 0; i < state.values.size(); ++i)
    CHECK(state_mapped.values[i] == state.values[i].map_generator(conj));
  CHECK(all_zero(closure_residual_c(state_mapped, L)));
}

TEST_CASE("theta closure residual vanishes on an exact fixed vector") {
  // tau_2(1) = 0 for m036, so the theta monodromy has eigenvalue 1; check
  // closure_residual_theta on an eigenvector found by elimination.
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  SolutionFile sol = parse_solution(fixtures::kM036TrivialSolution);
  PtolemyState state = propagate_c(sol.c, L, obs);
  auto K = sol.field;
  Matrix<NFElem> m = theta_monodromy_matrix(state, L);
  const int n = 6;
  // Solve (M - I) x = 0 by Gaussian elimination with a free last variable.
  Matrix<NFElem> a(n, n, NFElem::zero(K));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = m.at(i, j) - (i == j ? NFElem::one(K) : NFElem::zero(K));
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a.at(rank, j), a.at(piv, j));
    NFElem lead = a.at(rank, col);
    for (int j = 0; j < n; ++j) a.at(rank, j) = a.at(rank, j) / lead;
    for (int i = 0; i < n; ++i) {
      if (i == rank || a.at(i, col).is_zero()) continue;
      NFElem f = a.at(i, col);
      for (int j = 0; j < n; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(rank, j);
    }
    pivot_col[rank++] = col;
  }
  REQUIRE(rank < n);  // eigenvalue 1 exists
  // back-substitute with the first free column set to 1
  std::vector<NFElem> x(n, NFElem::zero(K));
  int free_col = 0;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  while (is_pivot[free_col]) ++free_col;
  x[free_col] = NFElem::one(K);
  for (int r = 0; r < rank; ++r)
    x[pivot_col[r]] = -a.at(r, free_col);
  ThetaState theta = propagate_theta(state, x, L);
  CHECK(all_zero(closure_residual_theta(state, theta, L)));
}
