// braid.hpp -- presentation-level arithmetic for sphere pure braid groups:
// exponent-sum relation matrices, abelianization by integer Smith normal
// form, and generating-set span checks.  Words live only as exponent
// vectors; there is no word-problem machinery here.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chamberkit/numeric.hpp"

namespace ck {

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
  std::vector<Int> divisors;  // nonzero diagonal entries d1 | d2 | ...
  int rank = 0;
  IntMatrix v;  // accumulated column operations: smith = row_ops(M) * v
};

// Elementary row/column reduction over Z; pivot rule: smallest nonzero
// absolute value, then row-major position.
SmithResult smith_normal_form(IntMatrix m);

struct PureBraidPresentation {
  int n = 0;
  bool quotient_full_twist = false;
  std::vector<std::pair<int, int>> generators;  // A_{ij}, i < j, lex order
  IntMatrix relations;                          // exponent-sum rows
  std::vector<std::string> relation_names;

  int generator_index(int i, int j) const;  // -1 if absent
  std::string generator_name(size_t idx) const;
};

// Generators A_{ij}; one surface relation (prod_{i<j} A_{ij})(prod_{k>j} A_{jk})
// per strand j; the full twist tau (exponent 1 on every generator) enters as
// tau = 1 in the quotient and tau^2 = 1 otherwise.
PureBraidPresentation build_presentation(int n, bool quotient_full_twist);

struct Abelianization {
  Int free_rank = 0;
  std::vector<Int> torsion;  // elementary divisors > 1
};

Abelianization abelianization(const PureBraidPresentation& p);

// True iff the chosen generators span the abelianization over Z (necessary
// for generation, not sufficient).
bool span_check(const PureBraidPresentation& p, const std::vector<std::pair<int, int>>& subset);

// True iff the word's exponent vector lies in the relation lattice, i.e. the
// word dies in the abelianization.
bool word_trivial_in_abelianization(const PureBraidPresentation& p,
                                    const std::vector<Int>& exponents);

// The displayed conversion A_{ij} = s_{j-1}...s_{i+1} s_i^2 s_{i+1}^{-1}...s_{j-1}^{-1}
// as a net exponent vector over the Artin generators s_1..s_{n-1}.
std::vector<Int> artin_sigma_exponents(int i, int j, int n);

}  // namespace ck
