#include "oneloop/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace oneloop {

Triangle normalize_triangle(const Triangle& t) {
  int best = 0;
  for (int r = 1; r < 3; ++r)
    if (t[r].label() < t[best].label()) best = r;
  return {t[best], t[(best + 1) % 3], t[(best + 2) % 3]};
}

OrientedEdge parse_edge_label(const std::string& token) {
  std::string s = token;
  bool rev = false;
  size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos < s.size() && s[pos] == '~') {
    rev = true;
    ++pos;
  }
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (start == pos) throw ParseError("expected edge label, got '" + token + "'");
  while (pos < s.size()) {
    if (!std::isspace(static_cast<unsigned char>(s[pos])))
      throw ParseError("trailing characters in edge label '" + token + "'");
    ++pos;
  }
  return {std::stoi(s.substr(start)), rev};
}

SurfaceTriangulation::SurfaceTriangulation(std::vector<Triangle> triangles)
    : triangles_(std::move(triangles)) {
  for (auto& t : triangles_) t = normalize_triangle(t);
  std::sort(triangles_.begin(), triangles_.end(),
            [](const Triangle& x, const Triangle& y) {
              return x[0].label() < y[0].label();
            });
  validate_and_index();
  compute_orbits();
}

void SurfaceTriangulation::validate_and_index() {
  if (triangles_.empty()) throw InvalidTriangulation("no triangles");
  if (triangles_.size() % 2 != 0)
    throw InvalidTriangulation("odd number of triangles");
  num_edges_ = static_cast<int>(triangles_.size() / 2 * 3);
  std::vector<int> pos_count(num_edges_, 0), neg_count(num_edges_, 0);
  for (const auto& t : triangles_)
    for (const auto& e : t) {
      if (e.index < 0 || e.index >= num_edges_)
        throw InvalidTriangulation("edge index " + std::to_string(e.index) +
                                   " out of range [0, " +
                                   std::to_string(num_edges_) + ")");
      (e.reversed ? neg_count : pos_count)[e.index]++;
    }
  for (int i = 0; i < num_edges_; ++i) {
    if (pos_count[i] + neg_count[i] != 2)
      throw InvalidTriangulation("edge " + std::to_string(i) + " used " +
                                 std::to_string(pos_count[i] + neg_count[i]) +
                                 " times (expected 2)");
    if (pos_count[i] != 1)
      throw InvalidTriangulation("edge " + std::to_string(i) +
                                 " must appear once with each orientation");
  }
}

void SurfaceTriangulation::compute_orbits() {
  // Around a puncture, the corner with outgoing edge y is followed by the
  // corner with outgoing edge ~x, where x precedes y in y's triangle.
  std::map<int, int> next;  // label -> label
  for (const auto& t : triangles_)
    for (int i = 0; i < 3; ++i) {
      const OrientedEdge& prev = t[i];
      const OrientedEdge& out = t[(i + 1) % 3];
      next[out.label()] = prev.opposite().label();
    }
  orbits_.clear();
  std::map<int, bool> seen;
  for (const auto& t : triangles_)
    for (const auto& e : t) {
      if (seen[e.label()]) continue;
      std::vector<OrientedEdge> orbit;
      int cur = e.label();
      while (!seen[cur]) {
        seen[cur] = true;
        orbit.push_back(OrientedEdge::from_label(cur));
        cur = next[cur];
      }
      orbits_.push_back(std::move(orbit));
    }
  num_punctures_ = static_cast<int>(orbits_.size());
}

int SurfaceTriangulation::puncture_incidence(int puncture,
                                             int edge_index) const {
  // tail(+e) is the vertex whose corner orbit contains +e; head(+e) is the
  // orbit containing ~e.
  const auto& orbit = orbits_.at(puncture);
  int count = 0;
  for (const auto& corner : orbit) {
    if (corner.index == edge_index) ++count;
  }
  return count;
}

SurfaceTriangulation SurfaceTriangulation::parse(const std::string& text) {
  std::vector<Triangle> tris;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in triangulation");
    ++pos;
  };
  expect('[');
  skip_ws();
  bool first = true;
  while (pos < text.size() && text[pos] != ']') {
    if (!first) expect(',');
    first = false;
    expect('(');
    Triangle t;
    for (int i = 0; i < 3; ++i) {
      if (i > 0) expect(',');
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
      t[i] = parse_edge_label(text.substr(start, pos - start));
    }
    expect(')');
    tris.push_back(t);
    skip_ws();
  }
  expect(']');
  skip_ws();
  if (pos != text.size())
    throw ParseError("trailing characters after triangulation");
  return SurfaceTriangulation(std::move(tris));
}

std::string SurfaceTriangulation::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < triangles_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << triangles_[i][0].str() << ", " << triangles_[i][1].str()
       << ", " << triangles_[i][2].str() << ")";
  }
  os << "]";
  return os.str();
}

bool SurfaceTriangulation::flippable(int edge_index) const {
  const Triangle* pos_tri = nullptr;
  const Triangle* neg_tri = nullptr;
  for (const auto& t : triangles_)
    for (const auto& e : t) {
      if (e.index != edge_index) continue;
      (e.reversed ? neg_tri : pos_tri) = &t;
    }
  return pos_tri && neg_tri && pos_tri != neg_tri;
}

FlipQuad SurfaceTriangulation::quad_about(int edge_index) const {
  if (edge_index < 0 || edge_index >= num_edges_)
    throw NotFlippable(edge_index);
  const Triangle* pos_tri = nullptr;
  const Triangle* neg_tri = nullptr;
  int pos_at = 0, neg_at = 0;
  for (const auto& t : triangles_)
    for (int i = 0; i < 3; ++i) {
      if (t[i].index != edge_index) continue;
      if (t[i].reversed) {
        neg_tri = &t;
        neg_at = i;
      } else {
        pos_tri = &t;
        pos_at = i;
      }
    }
  if (!pos_tri || !neg_tri || pos_tri == neg_tri)
    throw NotFlippable(edge_index);
  // Rotate so the flipped edge comes last: (a, b, e) and (c, d, ~e).
  FlipQuad q;
  q.a = (*pos_tri)[(pos_at + 1) % 3];
  q.b = (*pos_tri)[(pos_at + 2) % 3];
  q.c = (*neg_tri)[(neg_at + 1) % 3];
  q.d = (*neg_tri)[(neg_at + 2) % 3];
  return q;
}

SurfaceTriangulation SurfaceTriangulation::flipped(int edge_index) const {
  FlipQuad q = quad_about(edge_index);
  OrientedEdge e{edge_index, false};
  std::vector<Triangle> tris;
  tris.reserve(triangles_.size());
  for (const auto& t : triangles_) {
    bool touches = false;
    for (const auto& s : t) touches = touches || s.index == edge_index;
    if (!touches) tris.push_back(t);
  }
  // The new diagonal reuses the flipped edge's index.
  tris.push_back(Triangle{e.opposite(), q.d, q.a});
  tris.push_back(Triangle{e, q.b, q.c});
  return SurfaceTriangulation(std::move(tris));
}

Isometry Isometry::identity(int num_edges) {
  Isometry iso;
  iso.targets.reserve(num_edges);
  for (int i = 0; i < num_edges; ++i) iso.targets.push_back({i, false});
  return iso;
}

Isometry Isometry::inverse() const {
  Isometry inv;
  inv.targets.assign(targets.size(), OrientedEdge{});
  for (size_t j = 0; j < targets.size(); ++j) {
    const OrientedEdge& t = targets[j];
    inv.targets[t.index] = {static_cast<int>(j), t.reversed};
  }
  return inv;
}

std::string Isometry::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < targets.size(); ++i) {
    if (i) os << ", ";
    os << targets[i].str();
  }
  os << "]";
  return os.str();
}

SurfaceTriangulation SurfaceTriangulation::with_isometry(
    const Isometry& iso) const {
  if (static_cast<int>(iso.targets.size()) != num_edges_)
    throw InvalidIsometry("expected " + std::to_string(num_edges_) +
                          " entries, got " +
                          std::to_string(iso.targets.size()));
  std::vector<bool> hit(num_edges_, false);
  for (const auto& t : iso.targets) {
    if (t.index < 0 || t.index >= num_edges_ || hit[t.index])
      throw InvalidIsometry("targets are not a bijection on edges");
    hit[t.index] = true;
  }
  // new edge j = old edge targets[j]; rewrite old labels accordingly.
  std::vector<OrientedEdge> old_to_new(num_edges_);
  for (int j = 0; j < num_edges_; ++j) {
    const OrientedEdge& t = iso.targets[j];
    old_to_new[t.index] = {j, t.reversed};
  }
  auto relabel = [&](const OrientedEdge& e) {
    OrientedEdge img = old_to_new[e.index];
    if (e.reversed) img.reversed = !img.reversed;
    return img;
  };
  std::vector<Triangle> tris;
  tris.reserve(triangles_.size());
  for (const auto& t : triangles_)
    tris.push_back(Triangle{relabel(t[0]), relabel(t[1]), relabel(t[2])});
  return SurfaceTriangulation(std::move(tris));
}

namespace {

std::vector<std::string> split_bracketed_list(const std::string& text) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected a bracketed list: " + text);
  std::string inner = text.substr(open + 1, close - open - 1);
  std::vector<std::string> items;
  std::string cur;
  for (char c : inner) {
    if (c == ',') {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  bool blank = cur.find_first_not_of(" \t") == std::string::npos;
  if (!blank) items.push_back(cur);
  return items;
}

}  // namespace

MappingClass parse_monodromy(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string tri_line, iso_line, flips_line;
  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value' in monodromy file: " + line);
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::string value = line.substr(colon + 1);
    if (key == "triangulation")
      tri_line = value;
    else if (key == "isometry")
      iso_line = value;
    else if (key == "flips")
      flips_line = value;
    else
      throw ParseError("unknown key '" + key + "' in monodromy file");
  }
  if (tri_line.empty() || iso_line.empty() || flips_line.empty())
    throw ParseError(
        "monodromy file needs 'triangulation:', 'isometry:' and 'flips:'");

  SurfaceTriangulation source = SurfaceTriangulation::parse(tri_line);
  Isometry iso;
  for (const auto& item : split_bracketed_list(iso_line))
    iso.targets.push_back(parse_edge_label(item));
  std::vector<int> flips;
  for (const auto& item : split_bracketed_list(flips_line)) {
    OrientedEdge e = parse_edge_label(item);
    if (e.reversed) throw ParseError("flip entries must be plain edge indices");
    flips.push_back(e.index);
  }
  return MappingClass{std::move(source), std::move(iso), std::move(flips)};
}

std::string monodromy_to_string(const MappingClass& phi) {
  std::ostringstream os;
  os << "triangulation: " << phi.source.str() << "\n";
  os << "isometry: " << phi.isometry.str() << "\n";
  os << "flips: [";
  for (size_t i = 0; i < phi.flips.size(); ++i) {
    if (i) os << ", ";
    os << phi.flips[i];
  }
  os << "]\n";
  return os.str();
}

}  // namespace oneloop
