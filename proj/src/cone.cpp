#include "chamberkit/cone.hpp"

#include <algorithm>

#include "chamberkit/reduction.hpp"

namespace ck {

namespace {

const char kLetters[] = {'O', 'A', 'B', 'C', 'D'};

std::string letters_label(int k, const std::vector<int>& strict) {
  if (k == 2) return strict.empty() ? "OB" : "BOA";
  std::string label = "M";
  for (int e : strict) label += kLetters[e];
  return label;
}

std::string pattern_string(int k, const std::vector<bool>& strict) {
  if (k == 2) return strict[0] ? "c1>c2" : "c1=c2";
  std::string s = strict[0] ? "l<1" : "l=1";
  s += "; c1";
  for (int i = 1; i < k; ++i) {
    s += strict[static_cast<size_t>(i)] ? ">" : "=";
    s += "c" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

FaceDescriptor identify_face(const FormClass& w) {
  if (w.basis.kind != BasisKind::H) fail(Err::WrongBasis, "identify_face expects the H basis");
  int k = w.basis.blowups;
  if (k < 2 || k > 8) fail(Err::OutOfRange, "faces identified for 2 <= k <= 8");
  if (!is_reduced(w)) fail(Err::NotReduced, "identify_face expects a reduced form");
  if (!w.normalized()) fail(Err::NotNormalized, "identify_face expects nu = 1");

  FaceDescriptor face;
  face.k = k;
  face.representative = w;
  auto simple = canonical_simple_roots(k);
  std::vector<bool> strict(simple.size());
  for (size_t i = 0; i < simple.size(); ++i) {
    Rat a = area(w, simple[i]);
    if (a > 0) {
      strict[i] = true;
      face.strict_edges.push_back(static_cast<int>(i));
    }
  }
  face.label = k <= 5 ? letters_label(k, face.strict_edges) : "";
  face.gamma_L = lagrangian_system(w);
  RootSplit split = positive_split(w);
  face.N = split.N();
  face.NL = split.NL();
  face.area_pattern = pattern_string(k, strict);
  return face;
}

std::vector<Rat> face_vertex(int k, char letter) {
  if (k < 2 || k > 5) fail(Err::OutOfRange, "vertex lists available for 2 <= k <= 5");
  std::vector<Rat> v(static_cast<size_t>(k), Rat(0));
  switch (letter) {
    case 'M':
      for (auto& c : v) c = Rat(1, 3);
      return v;
    case 'O':
      return v;
    case 'A':
      v[0] = 1;
      return v;
    case 'B':
      v[0] = v[1] = Rat(1, 2);
      return v;
    case 'C':
      if (k < 4) break;
      v[0] = v[1] = v[2] = Rat(1, 3);
      return v;
    case 'D':
      if (k < 5) break;
      v[0] = v[1] = v[2] = v[3] = Rat(1, 3);
      return v;
    default:
      break;
  }
  fail(Err::OutOfRange, std::string("no vertex ") + letter + " for k = " + std::to_string(k));
}

namespace {

FormClass representative_for(int k, const std::vector<int>& strict) {
  if (k == 2) {
    // Bespoke cone (no reduced monotone vertex role): wall OB midpoint of O
    // and B, chamber BOA the centroid.
    std::vector<Rat> c(2);
    if (strict.empty()) {
      c[0] = c[1] = Rat(1, 4);
    } else {
      c[0] = Rat(1, 2);
      c[1] = Rat(1, 6);
    }
    return make_h_form(2, 1, c);
  }
  std::vector<std::vector<Rat>> points;
  points.push_back(face_vertex(k, 'M'));
  for (int e : strict) points.push_back(face_vertex(k, kLetters[e]));
  std::vector<Rat> c(static_cast<size_t>(k), Rat(0));
  for (const auto& p : points)
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] += p[static_cast<size_t>(i)];
  for (auto& x : c) x /= Rat(points.size());
  return make_h_form(k, 1, c);
}

}  // namespace

std::vector<FaceDescriptor> enumerate_faces(int k) {
  if (k < 2 || k > 5) fail(Err::OutOfRange, "face lattice enumerated for 2 <= k <= 5");
  int edges = k == 2 ? 1 : k;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<int> s;
    for (int e = 0; e < edges; ++e)
      if (mask & (1u << e)) s.push_back(e);
    subsets.push_back(std::move(s));
  }
  // Paper row order: by codimension (number of Lagrangian edges descending =
  // strict count ascending), then by edge indices.
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<FaceDescriptor> faces;
  for (const auto& s : subsets) {
    FormClass rep = representative_for(k, s);
    FaceDescriptor face = identify_face(rep);
    if (face.strict_edges != s)
      fail(Err::OutOfRange, "face representative does not realize its strictness pattern");
    faces.push_back(std::move(face));
  }
  return faces;
}

Int codim_of_label_set(const AdmissibleLabelSet& c) {
  for (size_t i = 0; i < c.classes.size(); ++i) {
    if (pairing(c.classes[i], c.classes[i]) >= 0)
      fail(Err::NotAdmissible, "label classes must have negative self-intersection");
    for (size_t j = i + 1; j < c.classes.size(); ++j) {
      if (c.classes[i] == c.classes[j]) fail(Err::NotAdmissible, "label classes must be distinct");
      if (pairing(c.classes[i], c.classes[j]) < 0)
        fail(Err::NotAdmissible, "label classes must pair non-negatively");
    }
  }
  Int codim = 0;
  for (const auto& a : c.classes) codim += -pairing(a, a) - 1;
  return 2 * codim;
}

}  // namespace ck
