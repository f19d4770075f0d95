#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneloop/fixtures.hpp"
#include "oneloop/report.hpp"

using namespace oneloop;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ObstructionData load_obstruction(const std::string& spec,
                                 const LayeredTriangulation& L) {
  if (spec.empty() || spec == "trivial") return ObstructionData::trivial(L);
  return ObstructionData::parse(read_file(spec), L);
}

std::vector<int> parse_n(const std::string& s) {
  if (s == "2") return {2};
  if (s == "3") return {3};
  if (s == "both") return {2, 3};
  throw Error("--n must be 2, 3 or both");
}

std::vector<Method> parse_methods(const std::string& s) {
  if (s == "full") return {Method::FullMatrix};
  if (s == "reduced") return {Method::ReducedJacobian};
  if (s == "both") return {Method::FullMatrix, Method::ReducedJacobian};
  throw Error("--method must be full, reduced or both");
}

int cmd_build(const std::string& monodromy_path,
              const std::string& obstruction_spec, bool json) {
  MappingClass phi = parse_monodromy(read_file(monodromy_path));
  LayeredTriangulation L = build_layered(phi);
  ObstructionData obs = load_obstruction(obstruction_spec, L);
  auto peqs = ptolemy_equations(L, obs);
  auto feqs = face_equations(L, obs);
  if (json) {
    nlohmann::json out;
    out["initial_surface"] = L.base().str();
    out["n"] = L.n();
    out["layers"] = L.num_layers();
    out["punctures"] = L.base().num_punctures();
    out["dump"] = L.dump(obs);
    auto& pe = out["ptolemy_equations"] = nlohmann::json::array();
    for (const auto& eq : peqs) pe.push_back(eq.str());
    auto& fe = out["face_equations"] = nlohmann::json::array();
    for (const auto& eq : feqs) fe.push_back(eq.str());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "initial surface: " << L.base().str() << "\n";
    std::cout << "punctures: " << L.base().num_punctures() << ", n = " << L.n()
              << ", layers = " << L.num_layers() << "\n\n";
    std::cout << L.dump(obs) << "\n";
    for (const auto& eq : peqs) std::cout << eq.str() << "\n";
    std::cout << "\n";
    for (size_t i = 0; i < feqs.size(); ++i)
      std::cout << "E" << (i + 1) << ": " << feqs[i].str() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& monodromy_path,
               const std::string& solution_path,
               const std::string& obstruction_spec, bool json) {
  MappingClass phi = parse_monodromy(read_file(monodromy_path));
  LayeredTriangulation L = build_layered(phi);
  ObstructionData obs = load_obstruction(obstruction_spec, L);
  SolutionFile solution = parse_solution(read_file(solution_path));
  VerifyReport report = run_verify(solution, L, obs);
  std::cout << (json ? verify_json(report) : verify_text(report));
  if (json) std::cout << "\n";
  return report.pass() ? 0 : 1;
}

int cmd_invariants(const std::string& monodromy_path,
                   const std::string& solution_path,
                   const std::string& obstruction_spec, const std::string& ns,
                   const std::string& methods, bool json) {
  MappingClass phi = parse_monodromy(read_file(monodromy_path));
  LayeredTriangulation L = build_layered(phi);
  ObstructionData obs = load_obstruction(obstruction_spec, L);
  SolutionFile solution = parse_solution(read_file(solution_path));
  VerifyReport verify = run_verify(solution, L, obs);
  if (!verify.pass()) {
    std::cerr << "solution fails verification:\n" << verify_text(verify);
    return 1;
  }
  InvariantsReport report =
      run_invariants(solution.c, L, obs, parse_n(ns), parse_methods(methods));
  std::cout << (json ? invariants_json(report) : invariants_text(report));
  if (json) std::cout << "\n";
  return report.pass ? 0 : 1;
}

int cmd_demo(bool json) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();

  MappingClass phi = parse_monodromy(fixtures::kM036Monodromy);
  LayeredTriangulation L = build_layered(phi);

  struct Job {
    const char* name;
    const char* solution;
    const char* obstruction;  // nullptr = trivial
    int n;
    Method method;
    LaurentPolynomial expected;
  };
  const std::vector<Job> jobs = {
      {"m036 trivial n=3 reduced", fixtures::kM036TrivialSolution, nullptr, 3,
       Method::ReducedJacobian, fixtures::m036_tau3_trivial()},
      {"m036 trivial n=3 full", fixtures::kM036TrivialSolution, nullptr, 3,
       Method::FullMatrix, fixtures::m036_tau3_trivial()},
      {"m036 trivial n=2 reduced", fixtures::kM036TrivialSolution, nullptr, 2,
       Method::ReducedJacobian, fixtures::m036_tau2_trivial()},
      {"m036 trivial n=2 full", fixtures::kM036TrivialSolution, nullptr, 2,
       Method::FullMatrix, fixtures::m036_tau2_trivial()},
      {"m036 signed n=3 reduced", fixtures::kM036SignedSolution,
       fixtures::kM036SignedObstruction, 3, Method::ReducedJacobian,
       fixtures::m036_tau3_signed()},
      {"m036 signed n=3 full", fixtures::kM036SignedSolution,
       fixtures::kM036SignedObstruction, 3, Method::FullMatrix,
       fixtures::m036_tau3_signed()},
      {"m036 signed n=2 reduced", fixtures::kM036SignedSolution,
       fixtures::kM036SignedObstruction, 2, Method::ReducedJacobian,
       fixtures::m036_tau2_signed()},
      {"m036 signed n=2 full", fixtures::kM036SignedSolution,
       fixtures::kM036SignedObstruction, 2, Method::FullMatrix,
       fixtures::m036_tau2_signed()},
  };

  nlohmann::json out;
  out["computations"] = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& job : jobs) {
    ObstructionData obs = job.obstruction
                              ? ObstructionData::parse(job.obstruction, L)
                              : ObstructionData::trivial(L);
    SolutionFile solution = parse_solution(job.solution);
    InvariantsReport rep =
        run_invariants(solution.c, L, obs, {job.n}, {job.method});
    const LaurentPolynomial& got = rep.rows.at(0).result.polynomial;
    const bool ok = loop_equal(got, job.expected);
    all_pass = all_pass && ok;
    if (json) {
      nlohmann::json entry;
      entry["name"] = job.name;
      entry["n"] = job.n;
      entry["method"] = method_name(job.method);
      entry["obstruction"] = obs.summary();
      entry["min_exp"] = got.min_exp();
      entry["max_exp"] = got.max_exp();
      auto coeffs = nlohmann::json::array();
      for (const auto& [exp, c] : got.terms())
        coeffs.push_back({{"exp", exp}, {"value", c.str()}});
      entry["coefficients"] = coeffs;
      entry["polynomial"] = got.str();
      entry["matches_published"] = ok;
      out["computations"].push_back(entry);
    } else {
      std::cout << (ok ? "[PASS] " : "[FAIL] ") << job.name << ": "
                << got.str() << "\n";
    }
  }
  const auto elapsed =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (json) {
    out["pass"] = all_pass;
    out["seconds"] = elapsed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all_pass ? "PASS" : "FAIL") << " (" << jobs.size()
              << " computations in " << elapsed << " s)\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "layered triangulations of fibered 3-manifolds: exact 1-loop and "
      "torsion polynomials"};
  app.require_subcommand(1);

  std::string monodromy_path, solution_path, obstruction_spec = "trivial";
  std::string ns = "both", methods = "both";
  bool json = false;

  auto* build =
      app.add_subcommand("build", "build the layered triangulation and "
                                  "print its equations");
  build->add_option("--monodromy", monodromy_path, "monodromy file")
      ->required();
  build->add_option("--obstruction", obstruction_spec,
                    "'trivial' or a signs/cocycle file");
  build->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand(
      "verify", "check a solution against the closure equations");
  verify->add_option("--monodromy", monodromy_path, "monodromy file")
      ->required();
  verify->add_option("--solution", solution_path, "solution file")->required();
  verify->add_option("--obstruction", obstruction_spec,
                     "'trivial' or a signs/cocycle file");
  verify->add_flag("--json", json, "machine-readable output");

  auto* invariants = app.add_subcommand(
      "invariants", "compute 1-loop/torsion polynomials");
  invariants->add_option("--monodromy", monodromy_path, "monodromy file")
      ->required();
  invariants->add_option("--solution", solution_path, "solution file")
      ->required();
  invariants->add_option("--obstruction", obstruction_spec,
                         "'trivial' or a signs/cocycle file");
  invariants->add_option("--n", ns, "2, 3 or both");
  invariants->add_option("--method", methods, "full, reduced or both");
  invariants->add_flag("--json", json, "machine-readable output");

  auto* demo = app.add_subcommand(
      "demo", "run the embedded m036 fixtures end to end");
  demo->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(build))
      return cmd_build(monodromy_path, obstruction_spec, json);
    if (app.got_subcommand(verify))
      return cmd_verify(monodromy_path, solution_path, obstruction_spec, json);
    if (app.got_subcommand(invariants))
      return cmd_invariants(monodromy_path, solution_path, obstruction_spec,
                            ns, methods, json);
    if (app.got_subcommand(demo)) return cmd_demo(json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
