#include "oneloop/report.hpp"

#include <sstream>

#include <json.hpp>

namespace oneloop {

InvariantsReport run_invariants(const std::vector<NFElem>& initial_c,
                                const LayeredTriangulation& L,
                                const ObstructionData& obs,
                                const std::vector<int>& ns,
                                const std::vector<Method>& methods) {
  InvariantsReport report;
  auto compute = [&](int n, Method method) -> TorsionResult {
    if (n == 3)
      return method == Method::ReducedJacobian
                 ? torsion3_reduced(initial_c, L, obs)
                 : oneloop3_full(initial_c, L, obs);
    if (n == 2)
      return method == Method::ReducedJacobian
                 ? torsion2_reduced(initial_c, L, obs)
                 : oneloop2_full(initial_c, L, obs);
    throw Error("only n = 2 and n = 3 are supported");
  };
  for (int n : ns) {
    for (Method method : methods) {
      TorsionResult result = compute(n, method);
      Rational bound = norm_lower_bound(result.polynomial, n);
      NFElem at_one =
          result.polynomial.eval(NFElem::one(result.polynomial.field()));
      report.rows.push_back(InvariantRow{std::move(result), std::move(bound),
                                         std::move(at_one)});
    }
    if (methods.size() >= 2) {
      bool equal = true;
      const LaurentPolynomial* first = nullptr;
      for (const auto& row : report.rows) {
        if (row.result.n != n) continue;
        if (!first)
          first = &row.result.polynomial;
        else
          equal = equal && loop_equal(*first, row.result.polynomial);
      }
      report.cross_checks.push_back({n, equal});
      report.pass = report.pass && equal;
    }
  }
  return report;
}

std::string invariants_text(const InvariantsReport& report) {
  std::ostringstream os;
  for (const auto& row : report.rows) {
    const auto& p = row.result.polynomial;
    os << "== invariants: n=" << row.result.n
       << " method=" << method_name(row.result.method)
       << " obstruction=" << row.result.obstruction << "\n";
    os << "polynomial: " << p.str() << "\n";
    os << "min_exp: " << p.min_exp() << "\n";
    os << "max_exp: " << p.max_exp() << "\n";
    os << "norm_lower_bound: " << to_string(row.bound) << "\n";
    os << "value_at_1: " << row.value_at_one.str() << "\n";
  }
  for (const auto& check : report.cross_checks)
    os << "== cross-check n=" << check.n << ": "
       << (check.equal ? "EQUAL" : "DIFFERENT") << "\n";
  os << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string invariants_json(const InvariantsReport& report) {
  nlohmann::json out;
  out["computations"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    const auto& p = row.result.polynomial;
    nlohmann::json entry;
    entry["n"] = row.result.n;
    entry["method"] = method_name(row.result.method);
    entry["obstruction"] = row.result.obstruction;
    entry["min_exp"] = p.min_exp();
    entry["max_exp"] = p.max_exp();
    auto coeffs = nlohmann::json::array();
    for (const auto& [exp, c] : p.terms())
      coeffs.push_back({{"exp", exp}, {"value", c.str()}});
    entry["coefficients"] = coeffs;
    entry["polynomial"] = p.str();
    entry["norm_lower_bound"] = to_string(row.bound);
    entry["value_at_1"] = row.value_at_one.str();
    out["computations"].push_back(entry);
  }
  out["cross_checks"] = nlohmann::json::array();
  for (const auto& check : report.cross_checks)
    out["cross_checks"].push_back({{"n", check.n}, {"equal", check.equal}});
  out["pass"] = report.pass;
  return out.dump(2);
}

VerifyReport run_verify(const SolutionFile& solution,
                        const LayeredTriangulation& L,
                        const ObstructionData& obs) {
  VerifyReport report;
  try {
    PtolemyState state = propagate_c(solution.c, L, obs);
    report.values_nonzero = true;
    auto residual = closure_residual_c(state, L);
    report.c_residual_zero = true;
    for (size_t j = 0; j < residual.size(); ++j) {
      if (residual[j].is_zero()) continue;
      report.c_residual_zero = false;
      report.notes.push_back("c'_" + std::to_string(j) + " - c_" +
                             std::to_string(j) + " = " + residual[j].str());
    }
    if (solution.theta) {
      ThetaState theta = propagate_theta(state, *solution.theta, L);
      auto theta_residual = closure_residual_theta(state, theta, L);
      bool zero = true;
      for (size_t j = 0; j < theta_residual.size(); ++j) {
        if (theta_residual[j].is_zero()) continue;
        zero = false;
        report.notes.push_back("theta'_" + std::to_string(j) + " - theta_" +
                               std::to_string(j) + " = " +
                               theta_residual[j].str());
      }
      report.theta_residual_zero = zero;
    }
  } catch (const DegenerateAssignment& e) {
    report.values_nonzero = false;
    report.notes.push_back(e.what());
  }
  return report;
}

std::string verify_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "values nonzero: " << (report.values_nonzero ? "yes" : "NO") << "\n";
  os << "c closure residual zero: "
     << (report.c_residual_zero ? "yes" : "NO") << "\n";
  if (report.theta_residual_zero)
    os << "theta closure residual zero: "
       << (*report.theta_residual_zero ? "yes" : "NO") << "\n";
  for (const auto& note : report.notes) os << "  " << note << "\n";
  os << (report.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string verify_json(const VerifyReport& report) {
  nlohmann::json out;
  out["values_nonzero"] = report.values_nonzero;
  out["c_residual_zero"] = report.c_residual_zero;
  if (report.theta_residual_zero)
    out["theta_residual_zero"] = *report.theta_residual_zero;
  out["notes"] = report.notes;
  out["pass"] = report.pass();
  return out.dump(2);
}

}  // namespace oneloop
