#pragma once

#include <array>
#include <string>
#include <vector>

#include "oneloop/errors.hpp"

namespace oneloop {

// An oriented edge of a surface triangulation. The printable label follows
// the flipper convention: "7" for the positive orientation of edge 7 and
// "~7" for its reverse. Internally labels order as ~(3n-1) < ... < ~0 < 0 <
// ... < 3n-1 via the encoding ~e = -e-1.
struct OrientedEdge {
  int index = 0;
  bool reversed = false;

  int label() const { return reversed ? -index - 1 : index; }
  static OrientedEdge from_label(int l) {
    return l >= 0 ? OrientedEdge{l, false} : OrientedEdge{-l - 1, true};
  }
  OrientedEdge opposite() const { return {index, !reversed}; }

  friend bool operator==(const OrientedEdge& a, const OrientedEdge& b) {
    return a.index == b.index && a.reversed == b.reversed;
  }
  friend bool operator!=(const OrientedEdge& a, const OrientedEdge& b) {
    return !(a == b);
  }
  friend bool operator<(const OrientedEdge& a, const OrientedEdge& b) {
    return a.label() < b.label();
  }

  std::string str() const {
    return (reversed ? "~" : "") + std::to_string(index);
  }
};

using Triangle = std::array<OrientedEdge, 3>;

// The four sides of the square around a flippable edge e: the triangle
// containing +e reads (a, b, e) up to rotation, the one containing ~e reads
// (c, d, ~e).
struct FlipQuad {
  OrientedEdge a, b, c, d;
};

// Relabeling of oriented edges: new edge j is old edge targets[j].
struct Isometry {
  std::vector<OrientedEdge> targets;

  Isometry inverse() const;
  static Isometry identity(int num_edges);
  std::string str() const;
};

// Ideal triangulation of a punctured surface: 2n counterclockwise triangles
// over 3n oriented edges, each edge used once with each orientation.
// Triangles are kept in a canonical order (each rotated so its least label
// comes first, then sorted), so equal triangulations compare equal.
class SurfaceTriangulation {
 public:
  explicit SurfaceTriangulation(std::vector<Triangle> triangles);

  int num_edges() const { return num_edges_; }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_punctures() const { return num_punctures_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  static SurfaceTriangulation parse(const std::string& text);
  std::string str() const;

  bool flippable(int edge_index) const;
  FlipQuad quad_about(int edge_index) const;
  SurfaceTriangulation flipped(int edge_index) const;
  SurfaceTriangulation with_isometry(const Isometry& iso) const;

  // Corner orbits around the punctures; each corner is named by its
  // outgoing oriented edge.
  const std::vector<std::vector<OrientedEdge>>& vertex_orbits() const {
    return orbits_;
  }
  // Number of endpoints of the given edge lying on the given puncture
  // (0, 1 or 2).
  int puncture_incidence(int puncture, int edge_index) const;

  friend bool operator==(const SurfaceTriangulation& a,
                         const SurfaceTriangulation& b) {
    return a.triangles_ == b.triangles_;
  }
  friend bool operator!=(const SurfaceTriangulation& a,
                         const SurfaceTriangulation& b) {
    return !(a == b);
  }

 private:
  void validate_and_index();
  void compute_orbits();

  std::vector<Triangle> triangles_;
  int num_edges_ = 0;
  int num_punctures_ = 0;
  std::vector<std::vector<OrientedEdge>> orbits_;
};

// A monodromy presented flipper-style: an edge relabeling followed by a
// sequence of flips, after which the triangulation must return to the
// source exactly.
struct MappingClass {
  SurfaceTriangulation source;
  Isometry isometry;
  std::vector<int> flips;
};

MappingClass parse_monodromy(const std::string& text);
std::string monodromy_to_string(const MappingClass& phi);

Triangle normalize_triangle(const Triangle& t);
OrientedEdge parse_edge_label(const std::string& token);

}  // namespace oneloop
