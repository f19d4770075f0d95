#pragma once

#include <array>
#include <string>
#include <vector>

#include "oneloop/bundle.hpp"

namespace oneloop {

// Signs deforming the equations of one layer, all relative to the trivial
// equations. Ptolemy signs multiply the three monomials of P_i (the first is
// +1 for data produced from a cocycle). Face-equation pairs give the signs
// on the alpha- and beta-face terms, with the new-face term kept positive.
struct LayerSigns {
  std::array<int, 3> ptolemy{1, 1, 1};
  std::array<int, 2> face_b_eq{1, 1};  // equation determining theta(face_b)
  std::array<int, 2> face_a_eq{1, 1};

  friend bool operator==(const LayerSigns&, const LayerSigns&) = default;
};

// A boundary obstruction class in equation-sign form. Trivial mode means
// all signs are +1.
class ObstructionData {
 public:
  enum class Mode { Trivial, EquationSigns };

  Mode mode = Mode::Trivial;
  std::vector<LayerSigns> layers;
  std::vector<int> closure_faces;  // sign per initial face

  static ObstructionData trivial(const LayeredTriangulation& L);
  static ObstructionData from_signs(std::vector<LayerSigns> layers,
                                    std::vector<int> closure_faces);

  const LayerSigns& layer(int i) const;  // 0-based
  int closure_face_sign(int face) const;
  bool all_positive() const;

  std::string summary() const;  // "trivial" or "signs"
  std::string str() const;
  static ObstructionData parse(const std::string& text,
                               const LayeredTriangulation& L);
};

// Sign assignment to the short edges of the truncated triangulation, one
// value per slot class; entries indexed by slot id must agree within a
// class.
struct ShortEdgeCocycle {
  std::vector<int> signs;  // size L.num_slots(), each +1 or -1

  static ShortEdgeCocycle all_positive(const LayeredTriangulation& L);
  static ShortEdgeCocycle parse(const std::string& text,
                                const LayeredTriangulation& L);
  std::string str(const LayeredTriangulation& L) const;
};

// Checks the class agreement and the cusp-triangle condition (the three
// signs around every cusp triangle multiply to +1); throws InvalidCocycle.
void validate_cocycle(const ShortEdgeCocycle& sigma,
                      const LayeredTriangulation& L);

// Converts a valid cocycle into equation-level signs.
ObstructionData cocycle_to_equation_signs(const ShortEdgeCocycle& sigma,
                                          const LayeredTriangulation& L);

// True iff the sign data is internally consistent: some valid cocycle
// produces it, up to the sign gauge c_e -> -c_e, theta_f -> -theta_f on the
// cells of the closed complex.
bool validate_obstruction(const ObstructionData& obs,
                          const LayeredTriangulation& L);

}  // namespace oneloop
