#include "chamberkit/braid.hpp"

#include <algorithm>

#include "chamberkit/error.hpp"

namespace ck {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  res.v.assign(cols, std::vector<Int>(cols, 0));
  for (size_t i = 0; i < cols; ++i) res.v[i][i] = 1;

  auto swap_rows = [&](size_t a, size_t b) { std::swap(m[a], m[b]); };
  auto swap_cols = [&](size_t a, size_t b) {
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (size_t r = 0; r < cols; ++r) std::swap(res.v[r][a], res.v[r][b]);
  };
  auto add_row = [&](size_t dst, size_t src, const Int& f) {
    for (size_t c = 0; c < cols; ++c) m[dst][c] += f * m[src][c];
  };
  auto add_col = [&](size_t dst, size_t src, const Int& f) {
    for (size_t r = 0; r < rows; ++r) m[r][dst] += f * m[r][src];
    for (size_t r = 0; r < cols; ++r) res.v[r][dst] += f * res.v[r][src];
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the trailing block, row-major ties.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || int_abs(m[i][j]) < int_abs(m[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    auto clear_cross = [&] {
      bool clean = false;
      while (!clean) {
        clean = true;
        for (size_t i = t + 1; i < rows; ++i)
          if (m[i][t] != 0) {
            Int f = m[i][t] / m[t][t];
            add_row(i, t, -f);
            if (m[i][t] != 0) {  // remainder smaller than pivot: swap and restart
              swap_rows(i, t);
              clean = false;
            }
          }
        for (size_t j = t + 1; j < cols; ++j)
          if (m[t][j] != 0) {
            Int f = m[t][j] / m[t][t];
            add_col(j, t, -f);
            if (m[t][j] != 0) {
              swap_cols(j, t);
              clean = false;
            }
          }
      }
    };
    clear_cross();
    // Divisibility: every trailing entry must be divisible by the pivot; a
    // bad row is folded into row t, which strictly shrinks the pivot.
    while (true) {
      size_t bi = 0;
      bool bad = false;
      for (size_t i = t + 1; i < rows && !bad; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bi = i;
            bad = true;
            break;
          }
      if (!bad) break;
      add_row(t, bi, 1);
      clear_cross();
    }
    if (m[t][t] < 0) {
      for (size_t c = 0; c < cols; ++c) m[t][c] = -m[t][c];
    }
    ++t;
  }
  for (size_t i = 0; i < t; ++i) res.divisors.push_back(m[i][i]);
  res.rank = static_cast<int>(t);
  return res;
}

int PureBraidPresentation::generator_index(int i, int j) const {
  for (size_t g = 0; g < generators.size(); ++g)
    if (generators[g].first == i && generators[g].second == j) return static_cast<int>(g);
  return -1;
}

std::string PureBraidPresentation::generator_name(size_t idx) const {
  return "A" + std::to_string(generators[idx].first) + std::to_string(generators[idx].second);
}

PureBraidPresentation build_presentation(int n, bool quotient_full_twist) {
  if (n < 3) fail(Err::OutOfRange, "sphere pure braid presentations need n >= 3");
  PureBraidPresentation p;
  p.n = n;
  p.quotient_full_twist = quotient_full_twist;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.generators.emplace_back(i, j);
  size_t g = p.generators.size();
  for (int j = 1; j <= n; ++j) {
    std::vector<Int> row(g, 0);
    for (int i = 1; i < j; ++i) row[static_cast<size_t>(p.generator_index(i, j))] += 1;
    for (int k = j + 1; k <= n; ++k) row[static_cast<size_t>(p.generator_index(j, k))] += 1;
    p.relations.push_back(std::move(row));
    p.relation_names.push_back("surface" + std::to_string(j));
  }
  std::vector<Int> twist(g, quotient_full_twist ? 1 : 2);
  p.relations.push_back(std::move(twist));
  p.relation_names.push_back(quotient_full_twist ? "tau" : "tau^2");
  return p;
}

Abelianization abelianization(const PureBraidPresentation& p) {
  Abelianization ab;
  auto snf = smith_normal_form(p.relations);
  ab.free_rank = Int(p.generators.size()) - snf.rank;
  for (const auto& d : snf.divisors)
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

bool span_check(const PureBraidPresentation& p,
                const std::vector<std::pair<int, int>>& subset) {
  size_t g = p.generators.size();
  IntMatrix m = p.relations;
  for (const auto& [i, j] : subset) {
    int idx = p.generator_index(i, j);
    if (idx < 0) fail(Err::OutOfRange, "generator A" + std::to_string(i) + std::to_string(j));
    std::vector<Int> row(g, 0);
    row[static_cast<size_t>(idx)] = 1;
    m.push_back(std::move(row));
  }
  auto snf = smith_normal_form(std::move(m));
  if (snf.rank != static_cast<int>(g)) return false;
  for (const auto& d : snf.divisors)
    if (d != 1) return false;
  return true;
}

bool word_trivial_in_abelianization(const PureBraidPresentation& p,
                                    const std::vector<Int>& exponents) {
  size_t g = p.generators.size();
  if (exponents.size() != g) fail(Err::OutOfRange, "exponent vector length");
  auto snf = smith_normal_form(p.relations);
  // v in row lattice of M  <=>  (v * V) clears against the diagonal.
  std::vector<Int> w(g, 0);
  for (size_t c = 0; c < g; ++c)
    for (size_t i = 0; i < g; ++i) w[c] += exponents[i] * snf.v[i][c];
  for (size_t c = 0; c < g; ++c) {
    if (c < static_cast<size_t>(snf.rank)) {
      if (w[c] % snf.divisors[c] != 0) return false;
    } else if (w[c] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Int> artin_sigma_exponents(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) fail(Err::OutOfRange, "need 1 <= i < j <= n");
  std::vector<Int> e(static_cast<size_t>(n - 1), 0);
  // conjugating prefix and its inverse cancel in exponent sum; sigma_i^2 remains
  e[static_cast<size_t>(i - 1)] = 2;
  return e;
}

}  // namespace ck
