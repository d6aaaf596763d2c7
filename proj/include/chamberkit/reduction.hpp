// reduction.hpp -- reducedness tests and normalization of symplectic classes
// into the fundamental domain by Cremona (Weyl) reflections and sorting
// transpositions.
#pragma once

#include <string>
#include <vector>

#include "chamberkit/lattice.hpp"

namespace ck {

// nu > c1 >= ... >= ck > 0 and nu >= ci+cj+cl; for k = 1, 2 the specialized
// conditions nu > c1 > 0 resp. c1 >= c2 > 0, c1+c2 < nu.
bool is_reduced(const FormClass& w);

// BF picture: omega(B) >= omega(F) >= a1 >= ... >= an > 0 and ai+aj <= omega(F).
bool is_reduced_bf(const FormClass& w);

// k = 5 only: NOT (c1 >= c2+c3 and c2 >= c3+c4 and c3 >= c4+c5).
bool is_balanced(const FormClass& w);

// x  |->  x + (x.root) root, for root.root = -2.
HomologyClass reflect(const HomologyClass& x, const HomologyClass& root);
FormClass reflect(const FormClass& x, const HomologyClass& root);

struct ReductionStep {
  enum Kind { Reflect, Permute } kind;
  HomologyClass root;  // Reflect
  int i = 0, j = 0;    // Permute (1-based blow-up indices)
};

struct ReductionTrace {
  FormClass start;
  FormClass end;
  std::vector<ReductionStep> steps;

  FormClass replay() const;          // applies steps to start
  FormClass apply(const FormClass& w) const;
  std::string to_log() const;        // REFLECT <class> / PERMUTE <i> <j> lines
};

// Parses a trace log (START/REFLECT/PERMUTE/END lines).
ReductionTrace trace_from_log(const std::string& log);

struct ReductionResult {
  FormClass form;  // the dominant representative reached
  ReductionTrace trace;
  bool sign_flipped = false;  // input entered with negative scale area
  bool degenerate = false;    // some boundary area vanishes: not a form but a blow-down
  std::vector<std::string> vanished;  // blown-down classes, e.g. "E3"

  bool reduced() const { return !degenerate; }
};

// Weyl-chamber descent: stable descending sort of the c_i by adjacent
// transpositions, reflection in H-E1-E2-E3 whenever c1+c2+c3 > nu.  The
// Cremona step strictly decreases nu, so the descent terminates; the cap is
// an engineering guard only.
ReductionResult reduce_to_fundamental_domain(const FormClass& w);

inline constexpr long kReductionIterationCap = 1000000;

}  // namespace ck
