#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oneloop/bundle.hpp"
#include "oneloop/fixtures.hpp"
#include "oneloop/obstruction.hpp"

using namespace oneloop;

namespace {

LayeredTriangulation m036() {
  return build_layered(parse_monodromy(fixtures::kM036Monodromy));
}

std::vector<std::string> equation_strings(
    const LayeredTriangulation& L, const ObstructionData& obs) {
  std::vector<std::string> out;
  for (const auto& eq : ptolemy_equations(L, obs)) out.push_back(eq.str());
  for (const auto& eq : face_equations(L, obs)) out.push_back(eq.str());
  return out;
}

// A two-flip monodromy of the once-punctured torus, found by search: the
// smallest closed layered complex, used for exhaustive cocycle checks.
MappingClass torus_two_flip_monodromy() {
  SurfaceTriangulation s = SurfaceTriangulation::parse("[(0,1,2),(~0,~1,~2)]");
  for (int f1 = 0; f1 < 3; ++f1)
    for (int f2 = 0; f2 < 3; ++f2) {
      std::vector<int> perm{0, 1, 2};
      std::sort(perm.begin(), perm.end());
      do {
        for (int mask = 0; mask < 8; ++mask) {
          Isometry iso;
          for (int j = 0; j < 3; ++j)
            iso.targets.push_back({perm[j], (mask >> j & 1) != 0});
          try {
            SurfaceTriangulation cur = s.with_isometry(iso);
            cur = cur.flipped(f1).flipped(f2);
            if (cur == s) return MappingClass{s, iso, {f1, f2}};
          } catch (const Error&) {
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  throw Error("no two-flip torus monodromy found");
}

}  // namespace

TEST_CASE("m036 layer slots satisfy the creation-order invariants") {
  LayeredTriangulation L = m036();
  CHECK(L.n() == 3);
  CHECK(L.num_layers() == 4);
  CHECK(L.num_edge_vars() == 13);
  CHECK(L.num_face_vars() == 14);
  for (const auto& layer : L.layers()) {
    CHECK(layer.top_var == 9 + layer.index - 1);
    CHECK(layer.bottom.var < layer.top_var);
    for (const auto& slot : {layer.ea, layer.eb, layer.ec, layer.ed})
      CHECK(slot.var < layer.top_var);
    CHECK(layer.face_a == 6 + 2 * (layer.index - 1));
    CHECK(layer.face_b == layer.face_a + 1);
    CHECK(layer.alpha_face < layer.face_a);
    CHECK(layer.beta_face < layer.face_a);
  }
}

TEST_CASE("m036 Ptolemy equations match the published ones verbatim") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  auto eqs = ptolemy_equations(L, obs);
  REQUIRE(eqs.size() == 4);
  CHECK(eqs[0].str() == "P1: c9*c8 - c2*c6 - c4*c7 = 0");
  CHECK(eqs[1].str() == "P2: c10*c5 + c1*c3 + c0*c4 = 0");
  CHECK(eqs[2].str() == "P3: c11*c7 + c0*c2 - c3*c9 = 0");
  CHECK(eqs[3].str() == "P4: c12*c4 + c1*c6 - c9*c10 = 0");
}

TEST_CASE("m036 face equations under the trivial class") {
  LayeredTriangulation L = m036();
  ObstructionData obs = ObstructionData::trivial(L);
  auto eqs = face_equations(L, obs);
  REQUIRE(eqs.size() == 8);
  CHECK(eqs[0].str() == "c9*th7 + c2*th0 + c7*th5 = 0");
  CHECK(eqs[1].str() == "c9*th6 + c4*th0 - c6*th5 = 0");
  CHECK(eqs[2].str() == "c10*th9 - c1*th3 + c4*th4 = 0");
  CHECK(eqs[3].str() == "c10*th8 - c0*th3 - c3*th4 = 0");
  CHECK(eqs[4].str() == "c11*th11 - c0*th1 + c9*th6 = 0");
  CHECK(eqs[5].str() == "c11*th10 + c3*th1 - c2*th6 = 0");
  CHECK(eqs[6].str() == "c12*th13 + c6*th7 + c10*th8 = 0");
  CHECK(eqs[7].str() == "c12*th12 + c9*th7 + c1*th8 = 0");
}

TEST_CASE("m036 signed equations match the sign fixture") {
  LayeredTriangulation L = m036();
  ObstructionData obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  auto peqs = ptolemy_equations(L, obs);
  CHECK(peqs[0].str() == "P1: c9*c8 + c2*c6 - c4*c7 = 0");
  CHECK(peqs[1].str() == "P2: c10*c5 + c1*c3 - c0*c4 = 0");
  CHECK(peqs[2].str() == "P3: c11*c7 - c0*c2 - c3*c9 = 0");
  CHECK(peqs[3].str() == "P4: c12*c4 + c1*c6 - c9*c10 = 0");
  auto feqs = face_equations(L, obs);
  CHECK(feqs[0].str() == "c9*th7 - c2*th0 - c7*th5 = 0");
  CHECK(feqs[1].str() == "c9*th6 - c4*th0 - c6*th5 = 0");
  CHECK(feqs[2].str() == "c10*th9 - c1*th3 - c4*th4 = 0");
  CHECK(feqs[3].str() == "c10*th8 - c0*th3 - c3*th4 = 0");
  CHECK(feqs[4].str() == "c11*th11 + c0*th1 - c9*th6 = 0");
  CHECK(feqs[5].str() == "c11*th10 - c3*th1 - c2*th6 = 0");
  CHECK(feqs[6].str() == "c12*th13 + c6*th7 + c10*th8 = 0");
  CHECK(feqs[7].str() == "c12*th12 + c9*th7 + c1*th8 = 0");
}

TEST_CASE("m036 closure maps") {
  LayeredTriangulation L = m036();
  const auto& edges = L.closure().edges;
  // (c'_0, ..., c'_8) = (c1, c2, c3, c12, c10, c6, c11, c9, -c0)
  const std::vector<SignedVar> expected{{1, 1},  {2, 1},  {3, 1},
                                        {12, 1}, {10, 1}, {6, 1},
                                        {11, 1}, {9, 1},  {0, -1}};
  CHECK(edges == expected);
  CHECK(L.closure().faces == std::vector<int>{9, 13, 11, 2, 12, 10});

  // closure maps are injective into the top-layer variables
  std::set<int> edge_targets, face_targets;
  for (const auto& s : edges) edge_targets.insert(s.var);
  for (int f : L.closure().faces) face_targets.insert(f);
  CHECK(edge_targets.size() == edges.size());
  CHECK(face_targets.size() == L.closure().faces.size());
}

TEST_CASE("inconsistent closure raises ClosureMismatch") {
  // Same source but a single flip cannot return to the start.
  MappingClass phi = parse_monodromy(
      "triangulation: [(0,1,2),(~0,~1,~2)]\n"
      "isometry: [0, 1, 2]\n"
      "flips: [0]\n");
  CHECK_THROWS_AS(build_layered(phi), ClosureMismatch);

  MappingClass empty = parse_monodromy(
      "triangulation: [(0,1,2),(~0,~1,~2)]\n"
      "isometry: [0, 1, 2]\n"
      "flips: []\n");
  CHECK_THROWS_AS(build_layered(empty), ClosureMismatch);
}

TEST_CASE("dump round-trips through its parser") {
  LayeredTriangulation L = m036();
  ObstructionData obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  LayeredDump dump = make_dump(L, obs);
  CHECK(LayeredDump::parse(dump.str()) == dump);
  CHECK_THROWS_AS(LayeredDump::parse("closure edges: [c0]"), ParseError);
}

TEST_CASE("obstruction files parse and validate") {
  LayeredTriangulation L = m036();
  ObstructionData trivial = ObstructionData::trivial(L);
  CHECK(trivial.all_positive());
  CHECK(validate_obstruction(trivial, L));

  ObstructionData signed_obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  CHECK(signed_obs.mode == ObstructionData::Mode::EquationSigns);
  CHECK_FALSE(signed_obs.all_positive());
  CHECK(validate_obstruction(signed_obs, L));
  // round-trip through the printer
  ObstructionData again = ObstructionData::parse(signed_obs.str(), L);
  CHECK(again.layers == signed_obs.layers);
  CHECK(again.closure_faces == signed_obs.closure_faces);
}

TEST_CASE("a single flipped sign on a shared face is rejected") {
  LayeredTriangulation L = m036();
  ObstructionData signed_obs =
      ObstructionData::parse(fixtures::kM036SignedObstruction, L);
  int rejected = 0, total = 0;
  for (size_t layer = 0; layer < signed_obs.layers.size(); ++layer) {
    for (int slot = 0; slot < 2; ++slot) {
      ObstructionData tampered = signed_obs;
      tampered.layers[layer].face_b_eq[slot] *= -1;
      total++;
      if (!validate_obstruction(tampered, L)) rejected++;
    }
  }
  CHECK(total == 8);
  CHECK(rejected == total);
}

TEST_CASE("trivial cocycle converts to the trivial obstruction") {
  LayeredTriangulation L = m036();
  ShortEdgeCocycle sigma = ShortEdgeCocycle::all_positive(L);
  ObstructionData obs = cocycle_to_equation_signs(sigma, L);
  CHECK(obs.mode == ObstructionData::Mode::Trivial);
  CHECK(obs.all_positive());
}

TEST_CASE("cocycles violating a cusp-triangle product are rejected") {
  LayeredTriangulation L = m036();
  ShortEdgeCocycle sigma = ShortEdgeCocycle::all_positive(L);
  sigma.signs[L.slot_class(0)] = -1;
  // fix class agreement for all slots in the class of 0, then the triangle
  // product at some cusp triangle is odd
  for (int s = 0; s < L.num_slots(); ++s)
    if (L.slot_class(s) == L.slot_class(0)) sigma.signs[s] = -1;
  CHECK_THROWS_AS(validate_cocycle(sigma, L), InvalidCocycle);

  ShortEdgeCocycle disagree = ShortEdgeCocycle::all_positive(L);
  disagree.signs[0] = -1;  // break class agreement only
  CHECK_THROWS_AS(validate_cocycle(disagree, L), InvalidCocycle);
}

TEST_CASE("exhaustive cocycle check on the two-tetrahedron torus bundle") {
  MappingClass phi = torus_two_flip_monodromy();
  LayeredTriangulation L = build_layered(phi);
  CHECK(L.num_layers() == 2);

  // Enumerate assignments on the slot classes and keep the valid cocycles.
  std::vector<int> reps;
  for (int s = 0; s < L.num_slots(); ++s)
    if (L.slot_class(s) == s) reps.push_back(s);
  REQUIRE(reps.size() <= 20);
  int valid_count = 0;
  for (long mask = 0; mask < (1L << reps.size()); ++mask) {
    ShortEdgeCocycle sigma = ShortEdgeCocycle::all_positive(L);
    for (size_t i = 0; i < reps.size(); ++i)
      if (mask >> i & 1) {
        for (int s = 0; s < L.num_slots(); ++s)
          if (L.slot_class(s) == reps[i]) sigma.signs[s] = -1;
      }
    try {
      validate_cocycle(sigma, L);
    } catch (const InvalidCocycle&) {
      continue;
    }
    ++valid_count;
    ObstructionData obs = cocycle_to_equation_signs(sigma, L);
    // the converted data is always internally consistent
    CHECK(validate_obstruction(obs, L));
    // the Ptolemy sign product is pinned by the cusp condition: eps2*eps3
    // equals the product of the four short edges around the two diagonals
    for (const auto& layer : L.layers()) {
      const auto& sl = layer.sigma_slots;
      int around = sigma.signs[sl[kSigma2_01]] * sigma.signs[sl[kSigma3_01]] *
                   sigma.signs[sl[kSigma1_23]] * sigma.signs[sl[kSigma0_23]];
      const LayerSigns& ls = obs.layer(layer.index - 1);
      CHECK(ls.ptolemy[1] * ls.ptolemy[2] == around);
    }
  }
  CHECK(valid_count > 0);
}
