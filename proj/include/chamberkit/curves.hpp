// curves.hpp -- decision procedures and exhaustive enumerations for negative
// and square-zero spherical classes under a reduced form in the BF basis
// (n <= 4), plus the minimal-area exceptional class and the minimal
// open-stratum configurations.
#pragma once

#include <utility>
#include <vector>

#include "chamberkit/roots.hpp"

namespace ck {

struct ConstraintReport {
  bool area_ok = false;
  Int adjunction_value = 0;  // 2(p-1)(q-1) - sum r_i(r_i - 1)
  Rat genus;
};

ConstraintReport passes_constraints(const HomologyClass& a, const FormClass& w);

struct AuditReport {
  bool precondition_ok = true;  // w was reduced; breaches are flagged, not fatal
  long long candidates = 0;     // classes satisfying area > 0 and adjunction >= 0
  long long violations = 0;
  std::vector<HomologyClass> counterexamples;  // capped sample of the violations
};

// Brute force over |p|, |q|, |r_i| <= bound: every class with positive area
// and non-negative adjunction genus must satisfy p >= 0; p = 0 => q in {0,1};
// p = 1 => r_i in {0,1}; p > 1 => q >= 1.
AuditReport lemma_classes_audit(const FormClass& w, int bound);

enum class FamilyKind { BClass, FClass, EClass };

struct NegativeSphereFamily {
  FamilyKind family;
  std::vector<HomologyClass> members;
  // Pattern members passing the adjunction inequality but not equality; empty
  // for these families since their shapes force genus 0.
  std::vector<HomologyClass> higher_genus_candidates;
};

// B = {B - kF - sum r_i E_i, k >= -1, r_i in {0,1}},
// F = {F - sum r_i E_i},  E = {E_j - sum_{i>j} r_i E_i};
// negative square, positive w-area, genus 0.
std::vector<NegativeSphereFamily> enumerate_negative_spheres(const FormClass& w);

// 2B+F-E1..4, B+2F-E1..4, B+F-Ei-Ej, B, F restricted to classes expressible
// for the given n.
std::vector<HomologyClass> square_zero_spheres(int n);

// Scans the exceptional classes for the area minimizer.  E_k attains the
// minimum for every reduced form when k = 1 or k >= 3 (asserted); at k = 2
// the class H-E1-E2 can be strictly smaller (c2 > (1-c1)/2) and the true
// minimizer is returned.
std::pair<HomologyClass, Rat> min_exceptional_area(const FormClass& w);

// The minimal configurations whose simultaneous J-holomorphicity
// characterizes J_open; verified against the root enumeration on return.
std::vector<HomologyClass> minimal_open_configuration(const BasisTag& tag);

}  // namespace ck
