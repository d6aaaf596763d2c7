// roots.hpp -- enumeration of -2 root classes and -1 exceptional classes,
// Lagrangian/symplectic splitting for a reduced form, and Dynkin
// classification with Weyl orders.
#pragma once

#include <vector>

#include "chamberkit/lattice.hpp"

namespace ck {

struct RootSet {
  int k = 0;
  std::vector<HomologyClass> roots;  // canonically ordered (lex on coefficients)
};

struct ExceptionalSet {
  int k = 0;
  std::vector<HomologyClass> classes;
};

struct DynkinComponent {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;

  auto operator<=>(const DynkinComponent&) const = default;
};

struct DynkinType {
  std::vector<DynkinComponent> components;  // canonical: sorted ascending

  DynkinType() = default;
  explicit DynkinType(std::vector<DynkinComponent> comps);

  bool trivial() const { return components.empty(); }
  int rank() const;
  Int weyl_order() const;
  Int positive_root_count() const;
  std::string to_string() const;

  bool operator==(const DynkinType&) const = default;
};

DynkinType dynkin_a(int n);
DynkinType dynkin_d(int n);
DynkinType dynkin_product(const DynkinType& a, const DynkinType& b);

// |R_k| = 2, 8, 20, 40, 72, 126, 240 for k = 2..8; empty for k <= 1.
RootSet enumerate_roots(int k);
// K.A = A.A = -1, exhaustive within the Cauchy-Schwarz coefficient bounds.
ExceptionalSet enumerate_exceptional(int k);

DynkinType ambient_type(int k);  // the full root system of the k-fold blow-up

// Simple roots H-E1-E2-E3, E1-E2, ..., E_{k-1}-E_k (k >= 3); {E1-E2} for k = 2.
std::vector<HomologyClass> canonical_simple_roots(int k);

// A fixed interior point of the open reduced chamber; root positivity is
// decided against it (walls vanish on some roots, the chamber does not).
FormClass reference_form(int k);

std::vector<HomologyClass> positive_roots(int k);

struct RootSplit {
  std::vector<HomologyClass> lagrangian;  // area 0
  std::vector<HomologyClass> symplectic;  // area > 0
  Int N() const { return Int(symplectic.size()); }
  Int NL() const { return Int(lagrangian.size()); }
};

RootSplit positive_split(const FormClass& w);

std::vector<HomologyClass> lagrangian_simple_roots(const FormClass& w);
DynkinType lagrangian_system(const FormClass& w);

// Recognizes paths (A_n), one-branch trees with arms (1,1,n-3) (D_n) and the
// three exceptional shapes (E_6..E_8).
DynkinType dynkin_classify(const std::vector<HomologyClass>& simple_roots);

Int weyl_order(const DynkinType& t);
Int positive_root_count(const DynkinType& t);

}  // namespace ck
