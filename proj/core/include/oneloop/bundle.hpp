#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "oneloop/surface.hpp"

namespace oneloop {

// Reference to an edge variable with a sign: the value is sign * c[var].
struct SignedVar {
  int var = 0;
  int sign = 1;

  friend bool operator==(const SignedVar& x, const SignedVar& y) {
    return x.var == y.var && x.sign == y.sign;
  }
  std::string str(const char* prefix = "c") const {
    return (sign < 0 ? std::string("-") : std::string()) + prefix +
           std::to_string(var);
  }
};

// One tetrahedron of the layered triangulation, attached by flipping
// `flipped_edge`. The square around the edge reads (a, b, e) / (c, d, ~e);
// the slots below hold the signed edge variables sitting on those sides at
// attachment time. Variable and face ids are 0-based: layer i (1-based)
// creates edge variable 3n+i-1 and face variables 2n+2i-2, 2n+2i-1.
struct TetrahedronLayer {
  int index = 0;
  int flipped_edge = 0;
  int top_var = 0;     // new edge variable
  SignedVar bottom;    // value on the flipped diagonal
  SignedVar ea, eb, ec, ed;
  int alpha_face = 0;  // bottom face under the (c, d, ~e) triangle
  int beta_face = 0;   // bottom face under the (a, b, e) triangle
  int face_a = 0;      // new face for the (e, b, c) triangle (even id)
  int face_b = 0;      // new face for the (~e, d, a) triangle (odd id)

  // Short-edge slot ids of the truncated tetrahedron, indexed by
  // SigmaIndex below.
  std::array<int, 12> sigma_slots{};
};

// Index of sigma^i_{jk} inside TetrahedronLayer::sigma_slots.
enum SigmaIndex {
  kSigma0_12, kSigma0_13, kSigma0_23,
  kSigma1_02, kSigma1_03, kSigma1_23,
  kSigma2_01, kSigma2_03, kSigma2_13,
  kSigma3_01, kSigma3_02, kSigma3_12,
};

struct ClosureMap {
  std::vector<SignedVar> edges;  // c'_j = sign * c[var]
  std::vector<int> faces;        // theta'_j = theta[faces[j]] up to obstruction sign
};

class ObstructionData;

// Layered ideal triangulation of the mapping torus of a flip-sequence
// monodromy. The initial surface is the isometry image of the source; the
// flips are applied in order and must land exactly back on the source
// triangulation, which is then identified with the initial surface.
class LayeredTriangulation {
 public:
  static LayeredTriangulation build(const MappingClass& phi);

  int n() const { return base_.num_edges() / 3; }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  int num_edge_vars() const { return base_.num_edges() + num_layers(); }
  int num_face_vars() const {
    return base_.num_triangles() + 2 * num_layers();
  }

  const SurfaceTriangulation& base() const { return base_; }
  const MappingClass& monodromy() const { return phi_; }
  const std::vector<TetrahedronLayer>& layers() const { return layers_; }
  const ClosureMap& closure() const { return closure_; }
  const std::vector<Triangle>& face_shapes() const { return face_shapes_; }

  // Short-edge slot classes after the closure identification.
  int num_slots() const { return 3 * num_face_vars(); }
  int slot_class(int slot) const;
  int num_slot_classes() const;

  std::string dump(const ObstructionData& obs) const;
  std::string dump() const;

 private:
  LayeredTriangulation(SurfaceTriangulation base, MappingClass phi)
      : base_(std::move(base)), phi_(std::move(phi)) {}

  SurfaceTriangulation base_;
  MappingClass phi_;
  std::vector<TetrahedronLayer> layers_;
  ClosureMap closure_;
  std::vector<Triangle> face_shapes_;
  std::vector<int> slot_parent_;
};

// Spec-level alias for LayeredTriangulation::build.
LayeredTriangulation build_layered(const MappingClass& phi);

// One Ptolemy equation P_i = 0 as printable/sign data: the monomials are
// top*bottom, the (a,c) product and the (b,d) product, each with its overall
// coefficient sign after folding orientation and obstruction signs.
struct PtolemyEquationView {
  int layer = 0;
  std::array<int, 2> m1{};  // variable ids: top, bottom
  std::array<int, 2> m2{};
  std::array<int, 2> m3{};
  int s1 = 1, s2 = 1, s3 = 1;
  std::string str() const;
};

// One face equation as printable/sign data: coef_new * theta_new +
// coef_alpha * theta_alpha + coef_beta * theta_beta = 0, normalized so the
// new-face coefficient is +c_top.
struct FaceEquationView {
  int layer = 0;
  int theta_new = 0, theta_alpha = 0, theta_beta = 0;
  SignedVar coef_alpha, coef_beta;
  int top_var = 0;
  std::string str() const;
};

std::vector<PtolemyEquationView> ptolemy_equations(
    const LayeredTriangulation& L, const ObstructionData& obs);
// Two equations per layer: the one determining theta(face_b) first.
std::vector<FaceEquationView> face_equations(const LayeredTriangulation& L,
                                             const ObstructionData& obs);

// Parse/print of the textual dump, for fixtures and round-trip checks.
struct LayeredDump {
  struct Layer {
    int index = 0;
    int top = 0;
    SignedVar bottom;
    std::array<SignedVar, 4> equatorial{};
    std::array<int, 2> faces{};
    std::array<int, 2> bottom_faces{};
    std::array<int, 3> signs{};
    friend bool operator==(const Layer&, const Layer&) = default;
  };
  std::vector<Layer> layers;
  std::vector<SignedVar> closure_edges;
  std::vector<int> closure_faces;

  std::string str() const;
  static LayeredDump parse(const std::string& text);
  friend bool operator==(const LayeredDump&, const LayeredDump&) = default;
};

LayeredDump make_dump(const LayeredTriangulation& L,
                      const ObstructionData& obs);

}  // namespace oneloop
