// packing.hpp -- feasibility of ball packings relative to RP^2 and the
// Cremona moves turning balanced reduced forms into packing-compatible ones.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "chamberkit/lattice.hpp"

namespace ck {

struct PackingSpec {
  std::array<Rat, 5> sizes;  // areas c_1..c_5 of the exceptional classes
};

struct PackingResult {
  bool feasible = false;
  bool boundary = false;     // some c_i = 1/2 exactly (the closed bound max c_i <= 1/2)
  FormClass certificate;     // the proof's CP^2#6 vector, sizes sorted descending
  Rat min_slack;             // minimal pairing over the three checklists
  std::string reason;        // set when infeasible
};

// Feasible iff max c_i <= 1/2 and sum c_i < 2; the certificate
// ((3/2-c1) | (1-c1), c2..c5, (1/2-c1)) must pair every E_i, H-E_i-E_j and
// 2H-sum E+E_i non-negatively (strictly away from the boundary).
PackingResult relative_packing_feasible(const PackingSpec& spec);

struct CremonaResult {
  int branch = 0;                   // 3, 2 or 1: reflected in H-E3-E4-E5, H-E2-E3-E4, H-E1-E2-E3
  HomologyClass root;
  FormClass pushed;                 // reflect(w, root), same scale as the input
  std::vector<std::pair<std::string, HomologyClass>> basis_map;  // h, e1..e5 in old classes
  std::array<Rat, 5> h_minus_2e;    // the proof's five positivity checks
  std::array<Rat, 5> sizes;         // areas of the new exceptional classes, nu-normalized
};

// Requires a balanced reduced k = 5 form; branch preference c3 < c4+c5, then
// c2 < c3+c4, then c1 < c2+c3.
CremonaResult cremona_to_packing_form(const FormClass& w);

}  // namespace ck
