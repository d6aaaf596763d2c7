// lattice.hpp -- exact integer/rational arithmetic on H_2(CP^2 # k CP^2-bar; Z)
// in the two tagged bases, with the intersection pairing, canonical class,
// areas and adjunction genus.
//
// Conventions.  A class is stored as its raw coefficient vector against the
// basis: (H, E1, ..., Ek) for the H basis of CP^2 # k CP^2-bar, and
// (B, F, E1, ..., En) for the BF basis of S^2 x S^2 # n CP^2-bar.  A form is
// stored as the coefficients of PD[omega].  The textual form literal
// "(nu|c1,...,ck)" lists the E-areas c_i positively, i.e. it denotes the class
// nu H - c1 E1 - ... - ck Ek; the BF literal "(b,f|a1,...,an)" lists the areas
// (omega(B), omega(F) | omega(E1), ...).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chamberkit/error.hpp"
#include "chamberkit/numeric.hpp"

namespace ck {

enum class BasisKind { H, BF };

struct BasisTag {
  BasisKind kind = BasisKind::H;
  int blowups = 0;  // k for HBasis(k), n for BFBasis(n)

  int dimension() const { return kind == BasisKind::H ? blowups + 1 : blowups + 2; }

  bool operator==(const BasisTag& o) const = default;

  // HBasis(k) and BFBasis(k-1) describe the same manifold; the transition
  // (B = H - E2, ...) needs at least two blow-ups on the H side.
  bool same_manifold(const BasisTag& o) const;

  std::string to_string() const;
};

inline BasisTag h_basis(int k) { return BasisTag{BasisKind::H, k}; }
inline BasisTag bf_basis(int n) { return BasisTag{BasisKind::BF, n}; }

struct HomologyClass {
  std::vector<Int> coeffs;
  BasisTag basis;

  bool operator==(const HomologyClass& o) const = default;
  bool operator<(const HomologyClass& o) const;  // lexicographic, for canonical ordering

  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator-() const;
  HomologyClass scaled(const Int& s) const;

  std::string to_string() const;
};

struct FormClass {
  std::vector<Rat> coeffs;  // coefficients of PD[omega]
  BasisTag basis;

  bool operator==(const FormClass& o) const = default;

  // H basis: area of H (the leading coefficient).  BF basis: area of F,
  // which is the B coefficient.
  Rat scale_area() const;
  bool normalized() const { return scale_area() == 1; }

  // E-areas as the normalized vectors list them: c_i resp. a_i.
  Rat blowup_area(int i) const;  // 1-based index into E1..E{blowups}

  std::string to_string() const;
};

// Basis element constructors.  index 0 = H (resp. B), 1 = E1 (resp. F), ...
HomologyClass basis_class(const BasisTag& tag, int index);
HomologyClass h_class(int k);                  // H in HBasis(k)
HomologyClass e_class(int k, int i);           // E_i in HBasis(k)
HomologyClass b_class(int n);                  // B in BFBasis(n)
HomologyClass f_class(int n);                  // F in BFBasis(n)
HomologyClass e_class_bf(int n, int i);        // E_i in BFBasis(n)
HomologyClass zero_class(const BasisTag& tag);

// Convenience: d*H - sum a_i E_i  /  p*B + q*F - sum r_i E_i.
HomologyClass make_h_class(int k, const Int& d, const std::vector<Int>& a);
HomologyClass make_bf_class(int n, const Int& p, const Int& q, const std::vector<Int>& r);

// (nu | c1,...,ck) resp. areas (b, f | a1,...,an).
FormClass make_h_form(int k, const Rat& nu, const std::vector<Rat>& c);
FormClass make_bf_form(int n, const Rat& area_b, const Rat& area_f, const std::vector<Rat>& a);

HomologyClass canonical_class(const BasisTag& tag);

Int pairing(const HomologyClass& a, const HomologyClass& b);
Rat pairing(const FormClass& a, const HomologyClass& b);
Rat pairing(const FormClass& a, const FormClass& b);

// omega(A) = PD[omega] . A
inline Rat area(const FormClass& w, const HomologyClass& a) { return pairing(w, a); }
Rat form_square(const FormClass& w);

// g_v(A) = (A.A + K.A)/2 + 1
Rat virtual_genus(const HomologyClass& a);

HomologyClass change_basis(const HomologyClass& x, const BasisTag& target);
FormClass change_basis(const FormClass& x, const BasisTag& target);

// Divides by the H-area (F-area in the BF basis); rejects zero scale.
FormClass normalize(const FormClass& w);

// Textual literals; print/parse round-trip is bit-exact on canonical output.
std::string class_to_string(const HomologyClass& a);
HomologyClass parse_class(const std::string& text, const BasisTag& tag);
HomologyClass parse_class(const std::string& text);  // infers the smallest tag
std::string form_to_string(const FormClass& w);
FormClass parse_form(const std::string& text);

}  // namespace ck
