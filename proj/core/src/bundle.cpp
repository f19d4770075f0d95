#include "oneloop/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "oneloop/obstruction.hpp"

namespace oneloop {

namespace {

int position_in_triangle(const Triangle& t, const OrientedEdge& e) {
  for (int i = 0; i < 3; ++i)
    if (t[i] == e) return i;
  throw Error("edge " + e.str() + " not found in triangle");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LayeredTriangulation LayeredTriangulation::build(const MappingClass& phi) {
  if (phi.flips.empty())
    throw ClosureMismatch("no flips: the layered triangulation is empty");

  SurfaceTriangulation initial = phi.source.with_isometry(phi.isometry);
  LayeredTriangulation L(initial, phi);
  const int n3 = initial.num_edges();
  const int n2 = initial.num_triangles();

  // Current signed variable carried by the positive orientation of each
  // surface edge.
  std::vector<SignedVar> var_of_edge(n3);
  for (int j = 0; j < n3; ++j) var_of_edge[j] = {j, +1};

  // Face variable sitting on each current triangle.
  std::map<Triangle, int> face_of;
  for (int j = 0; j < n2; ++j) {
    L.face_shapes_.push_back(initial.triangles()[j]);
    face_of[initial.triangles()[j]] = j;
  }

  auto slot_of = [&](int face, const OrientedEdge& corner_edge) {
    return 3 * face + position_in_triangle(L.face_shapes_[face], corner_edge);
  };

  SurfaceTriangulation current = initial;
  for (size_t k = 0; k < phi.flips.size(); ++k) {
    const int f = phi.flips[k];
    FlipQuad q = current.quad_about(f);
    const OrientedEdge e{f, false};

    TetrahedronLayer layer;
    layer.index = static_cast<int>(k) + 1;
    layer.flipped_edge = f;
    layer.top_var = n3 + static_cast<int>(k);
    layer.bottom = var_of_edge[f];
    auto slot_var = [&](const OrientedEdge& x) {
      SignedVar s = var_of_edge[x.index];
      if (x.reversed) s.sign = -s.sign;
      return s;
    };
    layer.ea = slot_var(q.a);
    layer.eb = slot_var(q.b);
    layer.ec = slot_var(q.c);
    layer.ed = slot_var(q.d);

    Triangle beta_tri = normalize_triangle({q.a, q.b, e});
    Triangle alpha_tri = normalize_triangle({q.c, q.d, e.opposite()});
    layer.beta_face = face_of.at(beta_tri);
    layer.alpha_face = face_of.at(alpha_tri);
    face_of.erase(beta_tri);
    face_of.erase(alpha_tri);

    layer.face_a = n2 + 2 * static_cast<int>(k);
    layer.face_b = layer.face_a + 1;
    Triangle face_a_tri{e, q.b, q.c};
    Triangle face_b_tri{e.opposite(), q.d, q.a};
    L.face_shapes_.push_back(face_a_tri);
    L.face_shapes_.push_back(face_b_tri);
    face_of[normalize_triangle(face_a_tri)] = layer.face_a;
    face_of[normalize_triangle(face_b_tri)] = layer.face_b;

    // Short-edge slots. With the square corners W2 (between d and c), V2
    // (between a and b), V3 (between b and c... going around), the
    // tetrahedron vertices are 0 = W2, 1 = V2, 2 = V3, 3 = V1, where the
    // bottom diagonal runs V3 -> V1 and the new top diagonal W2 -> V2.
    auto& sl = layer.sigma_slots;
    sl[kSigma1_23] = slot_of(layer.beta_face, q.a);
    sl[kSigma2_13] = slot_of(layer.beta_face, q.b);
    sl[kSigma3_12] = slot_of(layer.beta_face, e);
    sl[kSigma0_23] = slot_of(layer.alpha_face, q.c);
    sl[kSigma3_02] = slot_of(layer.alpha_face, q.d);
    sl[kSigma2_03] = slot_of(layer.alpha_face, e.opposite());
    sl[kSigma1_02] = 3 * layer.face_a + 0;
    sl[kSigma2_01] = 3 * layer.face_a + 1;
    sl[kSigma0_12] = 3 * layer.face_a + 2;
    sl[kSigma0_13] = 3 * layer.face_b + 0;
    sl[kSigma3_01] = 3 * layer.face_b + 1;
    sl[kSigma1_03] = 3 * layer.face_b + 2;

    var_of_edge[f] = {layer.top_var, +1};
    L.layers_.push_back(layer);
    current = current.flipped(f);
  }

  if (current != phi.source)
    throw ClosureMismatch(
        "after the flips the triangulation is " + current.str() +
        ", expected the source " + phi.source.str());

  // Closure: initial edge j sits over terminal edge targets[j]; initial
  // face j sits over the terminal triangle with relabeled sides.
  UnionFind uf(L.num_slots());
  L.closure_.edges.resize(n3);
  for (int j = 0; j < n3; ++j) {
    const OrientedEdge t = phi.isometry.targets[j];
    SignedVar s = var_of_edge[t.index];
    if (t.reversed) s.sign = -s.sign;
    L.closure_.edges[j] = s;
  }
  L.closure_.faces.resize(n2);
  for (int j = 0; j < n2; ++j) {
    const Triangle& shape = L.face_shapes_[j];
    auto relabel = [&](const OrientedEdge& x) {
      OrientedEdge img = phi.isometry.targets[x.index];
      if (x.reversed) img.reversed = !img.reversed;
      return img;
    };
    Triangle image{relabel(shape[0]), relabel(shape[1]), relabel(shape[2])};
    auto it = face_of.find(normalize_triangle(image));
    if (it == face_of.end())
      throw ClosureMismatch("initial face " + std::to_string(j) +
                            " has no terminal image");
    const int target = it->second;
    L.closure_.faces[j] = target;
    for (int corner = 0; corner < 3; ++corner) {
      int target_corner =
          position_in_triangle(L.face_shapes_[target], image[corner]);
      uf.unite(3 * j + corner, 3 * target + target_corner);
    }
  }

  L.slot_parent_.resize(L.num_slots());
  for (int s = 0; s < L.num_slots(); ++s) L.slot_parent_[s] = uf.find(s);
  return L;
}

LayeredTriangulation build_layered(const MappingClass& phi) {
  return LayeredTriangulation::build(phi);
}

int LayeredTriangulation::slot_class(int slot) const {
  return slot_parent_.at(slot);
}

int LayeredTriangulation::num_slot_classes() const {
  std::vector<int> reps = slot_parent_;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return static_cast<int>(reps.size());
}

// ---------------------------------------------------------------------------
// Equation views
// ---------------------------------------------------------------------------

std::vector<PtolemyEquationView> ptolemy_equations(
    const LayeredTriangulation& L, const ObstructionData& obs) {
  std::vector<PtolemyEquationView> out;
  for (const auto& layer : L.layers()) {
    const LayerSigns& signs = obs.layer(layer.index - 1);
    PtolemyEquationView v;
    v.layer = layer.index;
    v.m1 = {layer.top_var, layer.bottom.var};
    v.s1 = signs.ptolemy[0] * layer.bottom.sign;
    v.m2 = {layer.ea.var, layer.ec.var};
    v.s2 = -signs.ptolemy[1] * layer.ea.sign * layer.ec.sign;
    v.m3 = {layer.eb.var, layer.ed.var};
    v.s3 = signs.ptolemy[2] * layer.eb.sign * layer.ed.sign;
    out.push_back(v);
  }
  return out;
}

std::vector<FaceEquationView> face_equations(const LayeredTriangulation& L,
                                             const ObstructionData& obs) {
  std::vector<FaceEquationView> out;
  for (const auto& layer : L.layers()) {
    const LayerSigns& signs = obs.layer(layer.index - 1);
    // Equation determining theta(face_b):
    //   c_T theta_b + g_a c(c) theta_alpha + g_b c(b) theta_beta = 0
    FaceEquationView eb;
    eb.layer = layer.index;
    eb.theta_new = layer.face_b;
    eb.theta_alpha = layer.alpha_face;
    eb.theta_beta = layer.beta_face;
    eb.top_var = layer.top_var;
    eb.coef_alpha = layer.ec;
    eb.coef_alpha.sign *= signs.face_b_eq[0];
    eb.coef_beta = layer.eb;
    eb.coef_beta.sign *= signs.face_b_eq[1];
    out.push_back(eb);
    // Equation determining theta(face_a):
    //   c_T theta_a - g_a c(d) theta_alpha - g_b c(a) theta_beta = 0
    FaceEquationView ea;
    ea.layer = layer.index;
    ea.theta_new = layer.face_a;
    ea.theta_alpha = layer.alpha_face;
    ea.theta_beta = layer.beta_face;
    ea.top_var = layer.top_var;
    ea.coef_alpha = layer.ed;
    ea.coef_alpha.sign *= -signs.face_a_eq[0];
    ea.coef_beta = layer.ea;
    ea.coef_beta.sign *= -signs.face_a_eq[1];
    out.push_back(ea);
  }
  return out;
}

std::string PtolemyEquationView::str() const {
  std::ostringstream os;
  os << "P" << layer << ": ";
  auto term = [&](int s, const std::array<int, 2>& m, bool first) {
    if (s < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    os << "c" << m[0] << "*c" << m[1];
  };
  term(s1, m1, true);
  std::array<int, 2> m2s{std::min(m2[0], m2[1]), std::max(m2[0], m2[1])};
  std::array<int, 2> m3s{std::min(m3[0], m3[1]), std::max(m3[0], m3[1])};
  term(s2, m2s, false);
  term(s3, m3s, false);
  os << " = 0";
  return os.str();
}

std::string FaceEquationView::str() const {
  std::ostringstream os;
  os << "c" << top_var << "*th" << theta_new;
  auto term = [&](const SignedVar& coef, int theta) {
    os << (coef.sign < 0 ? " - " : " + ") << "c" << coef.var << "*th" << theta;
  };
  term(coef_alpha, theta_alpha);
  term(coef_beta, theta_beta);
  os << " = 0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Dump format
// ---------------------------------------------------------------------------

LayeredDump make_dump(const LayeredTriangulation& L,
                      const ObstructionData& obs) {
  LayeredDump d;
  for (const auto& layer : L.layers()) {
    LayeredDump::Layer row;
    row.index = layer.index;
    row.top = layer.top_var;
    row.bottom = layer.bottom;
    row.equatorial = {layer.ea, layer.eb, layer.ec, layer.ed};
    row.faces = {layer.face_a, layer.face_b};
    row.bottom_faces = {layer.alpha_face, layer.beta_face};
    row.signs = obs.layer(layer.index - 1).ptolemy;
    d.layers.push_back(row);
  }
  d.closure_edges = L.closure().edges;
  d.closure_faces = L.closure().faces;
  return d;
}

namespace {

std::string sign_str(int s) { return s < 0 ? "-1" : "+1"; }

}  // namespace

std::string LayeredDump::str() const {
  std::ostringstream os;
  for (const auto& l : layers) {
    os << "layer " << l.index << ": T=c" << l.top << " B=" << l.bottom.str()
       << " E=(" << l.equatorial[0].str() << "," << l.equatorial[1].str()
       << "," << l.equatorial[2].str() << "," << l.equatorial[3].str() << ")"
       << " faces=(" << l.faces[0] << "," << l.faces[1] << ")"
       << " bottom=(" << l.bottom_faces[0] << "," << l.bottom_faces[1] << ")"
       << " signs=(" << sign_str(l.signs[0]) << "," << sign_str(l.signs[1])
       << "," << sign_str(l.signs[2]) << ")\n";
  }
  os << "closure edges: [";
  for (size_t j = 0; j < closure_edges.size(); ++j) {
    if (j) os << ", ";
    os << closure_edges[j].str();
  }
  os << "]\n";
  os << "closure faces: [";
  for (size_t j = 0; j < closure_faces.size(); ++j) {
    if (j) os << ", ";
    os << closure_faces[j];
  }
  os << "]\n";
  return os.str();
}

std::string LayeredTriangulation::dump(const ObstructionData& obs) const {
  return make_dump(*this, obs).str();
}

std::string LayeredTriangulation::dump() const {
  return dump(ObstructionData::trivial(*this));
}

namespace {

struct DumpLexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  void expect(const std::string& token) {
    skip_ws();
    if (s.compare(pos, token.size(), token) != 0)
      throw ParseError("expected '" + token + "' at '" + s.substr(pos, 16) +
                       "'");
    pos += token.size();
  }
  bool accept(const std::string& token) {
    skip_ws();
    if (s.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }
  int read_int() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw ParseError("expected integer in dump");
    int v = std::stoi(s.substr(start, pos - start));
    return neg ? -v : v;
  }
  SignedVar read_signed_var() {
    skip_ws();
    SignedVar v;
    if (accept("-")) v.sign = -1;
    expect("c");
    v.var = read_int();
    return v;
  }
};

}  // namespace

LayeredDump LayeredDump::parse(const std::string& text) {
  LayeredDump d;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DumpLexer lx{line};
    if (lx.accept("layer")) {
      Layer row;
      row.index = lx.read_int();
      lx.expect(":");
      lx.expect("T=c");
      row.top = lx.read_int();
      lx.expect("B=");
      row.bottom = lx.read_signed_var();
      lx.expect("E=(");
      for (int i = 0; i < 4; ++i) {
        if (i) lx.expect(",");
        row.equatorial[i] = lx.read_signed_var();
      }
      lx.expect(")");
      lx.expect("faces=(");
      row.faces[0] = lx.read_int();
      lx.expect(",");
      row.faces[1] = lx.read_int();
      lx.expect(")");
      lx.expect("bottom=(");
      row.bottom_faces[0] = lx.read_int();
      lx.expect(",");
      row.bottom_faces[1] = lx.read_int();
      lx.expect(")");
      lx.expect("signs=(");
      for (int i = 0; i < 3; ++i) {
        if (i) lx.expect(",");
        int v = lx.read_int();
        if (v != 1 && v != -1) throw ParseError("signs must be +1 or -1");
        row.signs[i] = v;
      }
      lx.expect(")");
      d.layers.push_back(row);
    } else if (lx.accept("closure edges:")) {
      lx.expect("[");
      if (!lx.accept("]")) {
        do {
          d.closure_edges.push_back(lx.read_signed_var());
        } while (lx.accept(","));
        lx.expect("]");
      }
    } else if (lx.accept("closure faces:")) {
      lx.expect("[");
      if (!lx.accept("]")) {
        do {
          d.closure_faces.push_back(lx.read_int());
        } while (lx.accept(","));
        lx.expect("]");
      }
    } else {
      throw ParseError("unrecognized dump line: " + line);
    }
  }
  if (d.layers.empty()) throw ParseError("dump contains no layers");
  return d;
}

}  // namespace oneloop
