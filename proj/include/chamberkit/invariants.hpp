// invariants.hpp -- headline symplectomorphism-group invariants for a form:
// pi_0 description, pi_1 rank and the Q-invariant, plus regeneration of the
// published wall/chamber tables with discrepancy flags.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chamberkit/cone.hpp"

namespace ck {

struct Pi0Description {
  enum Torelli { Trivial, PB4ModCenter, PB5ModCenter, Unknown };
  Torelli torelli = Unknown;
  DynkinType quotient;  // the homological action W(Gamma_L)
  std::string note;

  std::string torelli_name() const;
};

struct Pi1Rank {
  bool exact = true;
  Int lo = 0, hi = 0;  // equal when exact
  std::string note;    // free rank conventions; torsion noted where known

  Int rank() const { return lo; }
  std::string to_string() const;
};

struct SympReport {
  FaceDescriptor face;
  DynkinType gamma_L;
  Int N = 0;
  Int NL = 0;
  Pi0Description pi0;
  Pi1Rank pi1;
  bool q_known = false;
  Int q = 0;
  std::vector<std::string> flags;  // paper discrepancies and hypothesis notes
};

// Free rank of pi_1(Symp(X, omega_mon)) for k = 1..4 (theorem inputs, not
// computations).
int monotone_pi1_rank(int k);

// Accepts any symplectic class with 1 <= k <= 5 (H basis) or n <= 4 (BF
// basis, n = 0 meaning S^2 x S^2); reduces internally.
SympReport analyze(const FormClass& w);

std::optional<Int> q_invariant(const FormClass& w);

struct TableRow {
  std::string label;
  std::string gamma;      // derived
  Int N = 0;
  std::string pi1;        // derived
  std::string area;
  std::vector<std::string> flags;
};

std::vector<TableRow> table_rows(int k);

enum class TableFormat { Text, Markdown, Json };
std::string emit_table(int k, TableFormat fmt, bool paper_compare = false);

// The published reference-table values for comparison (k = 2..5).
struct PaperRow {
  std::string label;
  std::string gamma;
  int N = 0;
  std::optional<int> pi1_rank;  // absent where the table prints no pi_1 column
};
const std::vector<PaperRow>& paper_table(int k);

}  // namespace ck
