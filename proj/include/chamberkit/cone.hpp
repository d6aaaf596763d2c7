// cone.hpp -- face lattice of the normalized reduced cone P^k: wall/chamber
// identification by letter label, canonical representative forms, and the
// codimension of admissible label sets.
#pragma once

#include <string>
#include <vector>

#include "chamberkit/roots.hpp"

namespace ck {

// Edge letters in fixed order: O = H-E1-E2-E3, A = E1-E2, B = E2-E3,
// C = E3-E4, D = E4-E5.  For k = 2 the single edge is E1-E2 and the
// bespoke labels OB (wall) / BOA (open chamber) are used.
struct FaceDescriptor {
  int k = 0;
  std::string label;
  std::vector<int> strict_edges;  // indices into canonical_simple_roots(k)
  DynkinType gamma_L;
  Int N = 0;
  Int NL = 0;
  FormClass representative;
  std::string area_pattern;
};

FaceDescriptor identify_face(const FormClass& w);

// One descriptor per subset of root edges, in (codimension, letter) order:
// 2^k faces for 2 <= k <= 5.  Representatives are equal-weight convex
// combinations of M and the face's vertices.
std::vector<FaceDescriptor> enumerate_faces(int k);

// Vertex coordinates of P^k (the monotone point plus one vertex per letter).
std::vector<Rat> face_vertex(int k, char letter);

struct AdmissibleLabelSet {
  std::vector<HomologyClass> classes;
};

// cod_R = 2 sum (-A_i.A_i - 1); requires A_i.A_j >= 0 for i != j and every
// class of negative square.
Int codim_of_label_set(const AdmissibleLabelSet& c);

}  // namespace ck
