#include "oneloop/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace oneloop {

ObstructionData ObstructionData::trivial(const LayeredTriangulation& L) {
  ObstructionData obs;
  obs.mode = Mode::Trivial;
  obs.layers.assign(L.num_layers(), LayerSigns{});
  obs.closure_faces.assign(L.n() * 2, 1);
  return obs;
}

ObstructionData ObstructionData::from_signs(std::vector<LayerSigns> layers,
                                            std::vector<int> closure_faces) {
  ObstructionData obs;
  obs.mode = Mode::EquationSigns;
  obs.layers = std::move(layers);
  obs.closure_faces = std::move(closure_faces);
  return obs;
}

const LayerSigns& ObstructionData::layer(int i) const {
  return layers.at(i);
}

int ObstructionData::closure_face_sign(int face) const {
  return closure_faces.at(face);
}

bool ObstructionData::all_positive() const {
  for (const auto& l : layers)
    if (l != LayerSigns{}) return false;
  return std::all_of(closure_faces.begin(), closure_faces.end(),
                     [](int s) { return s == 1; });
}

std::string ObstructionData::summary() const {
  return mode == Mode::Trivial ? "trivial" : "signs";
}

namespace {

std::string pm(int s) { return s < 0 ? "-1" : "+1"; }

int parse_pm(const std::string& tok) {
  std::string t;
  for (char c : tok)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "+1" || t == "+" || t == "1") return 1;
  if (t == "-1" || t == "-") return -1;
  throw ParseError("expected a sign (+1 or -1), got '" + tok + "'");
}

std::vector<std::string> split_tuple(const std::string& s, size_t& pos,
                                     char open, char close) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos >= s.size() || s[pos] != open)
    throw ParseError("expected '" + std::string(1, open) + "' in " + s);
  ++pos;
  std::vector<std::string> items;
  std::string cur;
  while (pos < s.size() && s[pos] != close) {
    if (s[pos] == ',') {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += s[pos];
    }
    ++pos;
  }
  if (pos >= s.size()) throw ParseError("unterminated tuple in " + s);
  ++pos;
  items.push_back(cur);
  return items;
}

}  // namespace

std::string ObstructionData::str() const {
  std::ostringstream os;
  os << "obstruction: signs\n";
  for (size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    os << "layer " << (i + 1) << ": ptolemy=(" << pm(l.ptolemy[0]) << ","
       << pm(l.ptolemy[1]) << "," << pm(l.ptolemy[2]) << ") faceB=("
       << pm(l.face_b_eq[0]) << "," << pm(l.face_b_eq[1]) << ") faceA=("
       << pm(l.face_a_eq[0]) << "," << pm(l.face_a_eq[1]) << ")\n";
  }
  os << "closure faces: [";
  for (size_t j = 0; j < closure_faces.size(); ++j) {
    if (j) os << ", ";
    os << pm(closure_faces[j]);
  }
  os << "]\n";
  return os.str();
}

ObstructionData ObstructionData::parse(const std::string& text,
                                       const LayeredTriangulation& L) {
  std::istringstream is(text);
  std::string line;
  std::string kind;
  std::vector<LayerSigns> layers(L.num_layers());
  std::vector<int> closure(L.n() * 2, 1);
  bool saw_layer = false;

  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    if (kind.empty()) {
      size_t pos = line.find(':');
      if (pos == std::string::npos || line.substr(0, pos) != "obstruction")
        throw ParseError("obstruction file must start with 'obstruction: ...'");
      kind = line.substr(pos + 1);
      kind.erase(std::remove_if(kind.begin(), kind.end(), ::isspace),
                 kind.end());
      if (kind == "trivial") return ObstructionData::trivial(L);
      if (kind == "cocycle") {
        // The remainder of the file is the cocycle listing.
        std::string rest((std::istreambuf_iterator<char>(is)),
                         std::istreambuf_iterator<char>());
        ShortEdgeCocycle sigma = ShortEdgeCocycle::parse(rest, L);
        validate_cocycle(sigma, L);
        return cocycle_to_equation_signs(sigma, L);
      }
      if (kind != "signs")
        throw ParseError("unknown obstruction kind '" + kind + "'");
      continue;
    }

    if (line.rfind("layer", 0) == 0) {
      size_t pos = 5;
      int idx = std::stoi(line.substr(pos));
      if (idx < 1 || idx > L.num_layers())
        throw ParseError("layer index out of range in obstruction file");
      LayerSigns ls;
      auto read_group = [&](const std::string& key, int count,
                            int* out) {
        size_t at = line.find(key + "=");
        if (at == std::string::npos)
          throw ParseError("missing '" + key + "=' in: " + line);
        size_t p = at + key.size() + 1;
        auto items = split_tuple(line, p, '(', ')');
        if (static_cast<int>(items.size()) != count)
          throw ParseError("expected " + std::to_string(count) + " signs for " +
                           key);
        for (int i = 0; i < count; ++i) out[i] = parse_pm(items[i]);
      };
      read_group("ptolemy", 3, ls.ptolemy.data());
      read_group("faceB", 2, ls.face_b_eq.data());
      read_group("faceA", 2, ls.face_a_eq.data());
      layers[idx - 1] = ls;
      saw_layer = true;
    } else if (line.rfind("closure faces:", 0) == 0) {
      size_t p = line.find('[');
      if (p == std::string::npos) throw ParseError("expected '[' in " + line);
      auto items = split_tuple(line, p, '[', ']');
      if (static_cast<int>(items.size()) != L.n() * 2)
        throw ParseError("closure faces must list " +
                         std::to_string(L.n() * 2) + " signs");
      for (size_t j = 0; j < items.size(); ++j) closure[j] = parse_pm(items[j]);
    } else {
      throw ParseError("unrecognized obstruction line: " + line);
    }
  }
  if (kind.empty()) throw ParseError("empty obstruction file");
  if (!saw_layer) throw ParseError("obstruction file lists no layer signs");

  // Renormalize so the first Ptolemy monomial carries +1.
  for (auto& ls : layers) {
    if (ls.ptolemy[0] < 0)
      for (auto& s : ls.ptolemy) s = -s;
  }
  return from_signs(std::move(layers), std::move(closure));
}

// ---------------------------------------------------------------------------
// Cocycles
// ---------------------------------------------------------------------------

ShortEdgeCocycle ShortEdgeCocycle::all_positive(
    const LayeredTriangulation& L) {
  return ShortEdgeCocycle{std::vector<int>(L.num_slots(), 1)};
}

std::string ShortEdgeCocycle::str(const LayeredTriangulation& L) const {
  std::ostringstream os;
  os << "obstruction: cocycle\n";
  for (int f = 0; f < L.num_face_vars(); ++f) {
    os << "face " << f << ": (" << pm(signs[3 * f]) << ", "
       << pm(signs[3 * f + 1]) << ", " << pm(signs[3 * f + 2]) << ")\n";
  }
  return os.str();
}

ShortEdgeCocycle ShortEdgeCocycle::parse(const std::string& text,
                                         const LayeredTriangulation& L) {
  ShortEdgeCocycle sigma;
  sigma.signs.assign(L.num_slots(), 1);
  std::vector<bool> seen(L.num_face_vars(), false);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("face", 0) != 0)
      throw ParseError("cocycle lines must read 'face <id>: (s, s, s)'");
    size_t pos = 4;
    int face = std::stoi(line.substr(pos), &pos);
    pos += 4;
    if (face < 0 || face >= L.num_face_vars())
      throw ParseError("face id out of range in cocycle file");
    size_t p = line.find('(');
    if (p == std::string::npos) throw ParseError("expected '(' in " + line);
    auto items = split_tuple(line, p, '(', ')');
    if (items.size() != 3)
      throw ParseError("each cocycle face needs three signs");
    for (int i = 0; i < 3; ++i) sigma.signs[3 * face + i] = parse_pm(items[i]);
    seen[face] = true;
  }
  for (int f = 0; f < L.num_face_vars(); ++f)
    if (!seen[f])
      throw ParseError("cocycle file misses face " + std::to_string(f));
  return sigma;
}

void validate_cocycle(const ShortEdgeCocycle& sigma,
                      const LayeredTriangulation& L) {
  if (static_cast<int>(sigma.signs.size()) != L.num_slots())
    throw InvalidCocycle("expected " + std::to_string(L.num_slots()) +
                         " short-edge signs");
  for (int s : sigma.signs)
    if (s != 1 && s != -1) throw InvalidCocycle("signs must be +1 or -1");
  for (int s = 0; s < L.num_slots(); ++s) {
    int rep = L.slot_class(s);
    if (sigma.signs[s] != sigma.signs[rep])
      throw InvalidCocycle("identified short edges carry different signs");
  }
  for (const auto& layer : L.layers()) {
    const auto& sl = layer.sigma_slots;
    auto prod = [&](SigmaIndex u, SigmaIndex v, SigmaIndex w) {
      return sigma.signs[sl[u]] * sigma.signs[sl[v]] * sigma.signs[sl[w]];
    };
    if (prod(kSigma0_12, kSigma0_13, kSigma0_23) != 1 ||
        prod(kSigma1_02, kSigma1_03, kSigma1_23) != 1 ||
        prod(kSigma2_01, kSigma2_03, kSigma2_13) != 1 ||
        prod(kSigma3_01, kSigma3_02, kSigma3_12) != 1)
      throw InvalidCocycle("a cusp triangle of layer " +
                           std::to_string(layer.index) +
                           " has sign product -1");
  }
}

ObstructionData cocycle_to_equation_signs(const ShortEdgeCocycle& sigma,
                                          const LayeredTriangulation& L) {
  validate_cocycle(sigma, L);
  std::vector<LayerSigns> layers;
  layers.reserve(L.num_layers());
  for (const auto& layer : L.layers()) {
    const auto& sl = layer.sigma_slots;
    auto sg = [&](SigmaIndex i) { return sigma.signs[sl[i]]; };
    LayerSigns ls;
    ls.ptolemy[0] = 1;
    ls.ptolemy[1] =
        sg(kSigma2_03) * sg(kSigma3_12) * sg(kSigma1_03) * sg(kSigma0_12);
    ls.ptolemy[2] =
        sg(kSigma3_02) * sg(kSigma2_13) * sg(kSigma1_02) * sg(kSigma0_13);
    const int w = sg(kSigma0_12) * sg(kSigma3_12);
    const int u1 = sg(kSigma1_23) * sg(kSigma0_23);
    const int v1 = sg(kSigma3_01) * sg(kSigma2_01);
    ls.face_b_eq = {w, w * u1};
    ls.face_a_eq = {w * v1, w};
    layers.push_back(ls);
  }
  // The closure identifies the top surface with the bottom one preserving
  // the outward coorientation, so the theta sides agree and no side-flip
  // sign is picked up there.
  std::vector<int> closure(L.n() * 2, 1);

  ObstructionData obs = ObstructionData::from_signs(std::move(layers),
                                                    std::move(closure));
  if (obs.all_positive()) obs.mode = ObstructionData::Mode::Trivial;
  return obs;
}

// ---------------------------------------------------------------------------
// Validation of equation-level data: is it cocycle-realizable up to gauge?
// ---------------------------------------------------------------------------

namespace {

// Dense GF(2) row with an augmented bit.
struct BitRow {
  std::vector<char> a;
  char rhs = 0;
};

bool gf2_solvable(std::vector<BitRow>& rows, size_t num_vars) {
  size_t rank_col = 0;
  size_t r = 0;
  for (; rank_col < num_vars && r < rows.size(); ++rank_col) {
    size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].a[rank_col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].a[rank_col]) {
        for (size_t c = 0; c < num_vars; ++c) rows[i].a[c] ^= rows[r].a[c];
        rows[i].rhs ^= rows[r].rhs;
      }
    }
    ++r;
  }
  for (size_t i = r; i < rows.size(); ++i) {
    bool all_zero = std::all_of(rows[i].a.begin(), rows[i].a.end(),
                                [](char c) { return !c; });
    if (all_zero && rows[i].rhs) return false;
  }
  return true;
}

char bit_of_sign(int s) { return s < 0 ? 1 : 0; }

}  // namespace

namespace {

// The standard labeling of a layer's tetrahedron is fixed only up to the
// orientation-preserving relabeling exchanging the two new faces; under it
// the new-face coefficient signs of the face equations read off different
// short edges. validate_obstruction therefore searches over that choice per
// layer.
struct FaceRowShape {
  std::array<SigmaIndex, 2> w_slots;
  bool beq_beta_uses_u1;  // otherwise v1; the A-equation uses the other
};

FaceRowShape row_shape(bool flipped) {
  if (!flipped) return {{kSigma0_12, kSigma3_12}, true};
  return {{kSigma1_03, kSigma2_03}, false};
}

}  // namespace

bool validate_obstruction(const ObstructionData& obs,
                          const LayeredTriangulation& L) {
  if (static_cast<int>(obs.layers.size()) != L.num_layers()) return false;
  if (static_cast<int>(obs.closure_faces.size()) != L.n() * 2) return false;
  if (obs.mode == ObstructionData::Mode::Trivial) return obs.all_positive();

  // Unknowns: one bit per slot class, one gauge bit per edge class of the
  // closed complex, one per face class.
  std::map<int, int> slot_var;
  for (int s = 0; s < L.num_slots(); ++s) {
    int rep = L.slot_class(s);
    if (!slot_var.count(rep)) {
      int next = static_cast<int>(slot_var.size());
      slot_var[rep] = next;
    }
  }
  const int num_slot_vars = static_cast<int>(slot_var.size());

  // Edge variable classes under the closure identification.
  std::vector<int> edge_parent(L.num_edge_vars());
  std::iota(edge_parent.begin(), edge_parent.end(), 0);
  std::function<int(int)> efind = [&](int x) {
    while (edge_parent[x] != x) x = edge_parent[x] = edge_parent[edge_parent[x]];
    return x;
  };
  for (int j = 0; j < 3 * L.n(); ++j)
    edge_parent[efind(j)] = efind(L.closure().edges[j].var);

  // Edge gauge bits act per closure class (flipping an edge value flips
  // every variable naming that edge, keeping the fixed closure signs);
  // face gauge bits act per variable, since the closure face signs are part
  // of the observed data.
  std::map<int, int> edge_var;
  for (int j = 0; j < L.num_edge_vars(); ++j) {
    int rep = efind(j);
    if (!edge_var.count(rep))
      edge_var[rep] = num_slot_vars + static_cast<int>(edge_var.size());
  }
  const int num_edge_gauge = static_cast<int>(edge_var.size());
  const int face_gauge_base = num_slot_vars + num_edge_gauge;
  const size_t num_vars = face_gauge_base + L.num_face_vars();

  auto solvable_with = [&](unsigned long mask) {
    std::vector<BitRow> rows;
    auto new_row = [&]() -> BitRow& {
      rows.push_back(BitRow{std::vector<char>(num_vars, 0), 0});
      return rows.back();
    };
    auto add_slot = [&](BitRow& row, int slot) {
      row.a[slot_var.at(L.slot_class(slot))] ^= 1;
    };
    auto add_edge = [&](BitRow& row, int var) {
      row.a[edge_var.at(efind(var))] ^= 1;
    };
    auto add_face = [&](BitRow& row, int face) {
      row.a[face_gauge_base + face] ^= 1;
    };

    for (const auto& layer : L.layers()) {
      const auto& sl = layer.sigma_slots;
      const std::array<std::array<SigmaIndex, 3>, 4> cusp{{
          {kSigma0_12, kSigma0_13, kSigma0_23},
          {kSigma1_02, kSigma1_03, kSigma1_23},
          {kSigma2_01, kSigma2_03, kSigma2_13},
          {kSigma3_01, kSigma3_02, kSigma3_12},
      }};
      for (const auto& tri : cusp) {
        BitRow& row = new_row();
        for (SigmaIndex i : tri) add_slot(row, sl[i]);
      }

      const LayerSigns& ls = obs.layer(layer.index - 1);
      const int norm = ls.ptolemy[0];

      // eps2 = sigma^2_03 sigma^3_12 sigma^1_03 sigma^0_12 * g-factors
      {
        BitRow& row = new_row();
        add_slot(row, sl[kSigma2_03]);
        add_slot(row, sl[kSigma3_12]);
        add_slot(row, sl[kSigma1_03]);
        add_slot(row, sl[kSigma0_12]);
        add_edge(row, layer.ea.var);
        add_edge(row, layer.ec.var);
        add_edge(row, layer.top_var);
        add_edge(row, layer.bottom.var);
        row.rhs = bit_of_sign(ls.ptolemy[1] * norm);
      }
      // eps3 = sigma^3_02 sigma^2_13 sigma^1_02 sigma^0_13 * g-factors
      {
        BitRow& row = new_row();
        add_slot(row, sl[kSigma3_02]);
        add_slot(row, sl[kSigma2_13]);
        add_slot(row, sl[kSigma1_02]);
        add_slot(row, sl[kSigma0_13]);
        add_edge(row, layer.eb.var);
        add_edge(row, layer.ed.var);
        add_edge(row, layer.top_var);
        add_edge(row, layer.bottom.var);
        row.rhs = bit_of_sign(ls.ptolemy[2] * norm);
      }

      const FaceRowShape shape =
          row_shape((mask >> (layer.index - 1)) & 1);
      auto add_u1 = [&](BitRow& row) {
        add_slot(row, sl[kSigma1_23]);
        add_slot(row, sl[kSigma0_23]);
      };
      auto add_v1 = [&](BitRow& row) {
        add_slot(row, sl[kSigma3_01]);
        add_slot(row, sl[kSigma2_01]);
      };
      auto add_w = [&](BitRow& row) {
        add_slot(row, sl[shape.w_slots[0]]);
        add_slot(row, sl[shape.w_slots[1]]);
      };
      // theta(face_b) equation: g_alpha = w * gauge, g_beta = w*u1 * gauge
      // (u1 and v1 trade places under the flipped labeling).
      {
        BitRow& row = new_row();
        add_w(row);
        add_edge(row, layer.top_var);
        add_face(row, layer.face_b);
        add_edge(row, layer.ec.var);
        add_face(row, layer.alpha_face);
        row.rhs = bit_of_sign(ls.face_b_eq[0]);
      }
      {
        BitRow& row = new_row();
        add_w(row);
        if (shape.beq_beta_uses_u1)
          add_u1(row);
        else
          add_v1(row);
        add_edge(row, layer.top_var);
        add_face(row, layer.face_b);
        add_edge(row, layer.eb.var);
        add_face(row, layer.beta_face);
        row.rhs = bit_of_sign(ls.face_b_eq[1]);
      }
      // theta(face_a) equation: g_alpha = w*v1 * gauge, g_beta = w * gauge.
      {
        BitRow& row = new_row();
        add_w(row);
        if (shape.beq_beta_uses_u1)
          add_v1(row);
        else
          add_u1(row);
        add_edge(row, layer.top_var);
        add_face(row, layer.face_a);
        add_edge(row, layer.ed.var);
        add_face(row, layer.alpha_face);
        row.rhs = bit_of_sign(ls.face_a_eq[0]);
      }
      {
        BitRow& row = new_row();
        add_w(row);
        add_edge(row, layer.top_var);
        add_face(row, layer.face_a);
        add_edge(row, layer.ea.var);
        add_face(row, layer.beta_face);
        row.rhs = bit_of_sign(ls.face_a_eq[1]);
      }
    }

    // Closure face signs: the identification is side-preserving, so the
    // observed sign is pure gauge of the two identified variables.
    for (int j = 0; j < 2 * L.n(); ++j) {
      BitRow& row = new_row();
      add_face(row, j);
      add_face(row, L.closure().faces[j]);
      row.rhs = bit_of_sign(obs.closure_faces[j]);
    }

    return gf2_solvable(rows, num_vars);
  };

  const int layers = L.num_layers();
  if (layers > 24) return solvable_with(0);  // keep the search bounded
  for (unsigned long mask = 0; mask < (1UL << layers); ++mask)
    if (solvable_with(mask)) return true;
  return false;
}

}  // namespace oneloop
