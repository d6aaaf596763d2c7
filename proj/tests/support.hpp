// support.hpp -- shared test machinery: random reduced forms, Weyl scrambles,
// and the independent BFS oracles (orbit closure for root systems, matrix
// closure for Weyl group orders, orbit search for the reduction target).
#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "chamberkit/reduction.hpp"
#include "chamberkit/roots.hpp"

namespace cktest {

using namespace ck;

inline Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

// Random reduced H form (1 | c1 >= ... >= ck > 0, c1+c2+c3 <= 1, c1 < 1) by
// rejection over a random denominator.
inline FormClass random_reduced_h_form(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> den_dist(24, 60);
  while (true) {
    int d = den_dist(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    std::vector<int> c(static_cast<size_t>(k));
    for (auto& x : c) x = num(rng);
    std::sort(c.rbegin(), c.rend());
    if (c[0] >= d) continue;
    if (k >= 3 && c[0] + c[1] + c[2] > d) continue;
    if (k == 2 && c[0] + c[1] >= d) continue;
    std::vector<Rat> cr(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cr[static_cast<size_t>(i)] = Rat(c[static_cast<size_t>(i)], d);
    return make_h_form(k, 1, cr);
  }
}

// Random reduced BF form: omega(B) = mu >= 1 = omega(F) >= a1 >= ... >= an > 0
// with a1 + a2 <= 1.
inline FormClass random_reduced_bf_form(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> den_dist(16, 48);
  std::uniform_int_distribution<int> mu_extra(0, 40);
  while (true) {
    int d = den_dist(rng);
    Rat mu = 1 + Rat(mu_extra(rng), d);
    std::vector<int> a(static_cast<size_t>(n));
    std::uniform_int_distribution<int> num(1, d);
    for (auto& x : a) x = num(rng);
    std::sort(a.rbegin(), a.rend());
    if (n >= 1 && a[0] > d) continue;
    if (n >= 2 && a[0] + a[1] > d) continue;
    std::vector<Rat> ar(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ar[static_cast<size_t>(i)] = Rat(a[static_cast<size_t>(i)], d);
    return make_bf_form(n, mu, 1, ar);
  }
}

inline FormClass random_balanced_reduced_5(std::mt19937& rng) {
  while (true) {
    FormClass w = random_reduced_h_form(5, rng);
    if (is_balanced(w)) return w;
  }
}

// A random word of reflections in roots of E_k applied to w.
inline FormClass weyl_scramble(const FormClass& w, std::mt19937& rng, int steps = 12) {
  auto roots = enumerate_roots(w.basis.blowups).roots;
  if (roots.empty()) return w;
  std::uniform_int_distribution<size_t> pick(0, roots.size() - 1);
  FormClass cur = w;
  for (int s = 0; s < steps; ++s) cur = reflect(cur, roots[pick(rng)]);
  return cur;
}

// Orbit of a form under the full Weyl group by BFS over simple reflections.
inline std::set<std::vector<Rat>> weyl_orbit(const FormClass& w) {
  auto simple = canonical_simple_roots(w.basis.blowups);
  std::set<std::vector<Rat>> seen{w.coeffs};
  std::vector<FormClass> frontier{w};
  while (!frontier.empty()) {
    std::vector<FormClass> next;
    for (const auto& f : frontier)
      for (const auto& r : simple) {
        FormClass g = reflect(f, r);
        if (seen.insert(g.coeffs).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Closure of a simple-root set under its own reflections: the full root
// system it generates (every root is W-conjugate to a simple root).
inline std::set<std::vector<Int>> root_closure(const std::vector<HomologyClass>& simple) {
  std::set<std::vector<Int>> seen;
  std::vector<HomologyClass> frontier;
  for (const auto& s : simple) {
    if (seen.insert(s.coeffs).second) frontier.push_back(s);
    HomologyClass m = -s;
    if (seen.insert(m.coeffs).second) frontier.push_back(m);
  }
  while (!frontier.empty()) {
    std::vector<HomologyClass> next;
    for (const auto& f : frontier)
      for (const auto& s : simple) {
        HomologyClass g = reflect(f, s);
        if (seen.insert(g.coeffs).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Weyl group order by BFS over the group elements themselves, represented as
// their integer matrices on the ambient lattice.
inline long long weyl_order_bfs(const std::vector<HomologyClass>& simple) {
  if (simple.empty()) return 1;
  size_t dim = simple[0].coeffs.size();
  using Matrix = std::vector<Int>;  // row-major dim x dim
  auto identity = [&] {
    Matrix m(dim * dim, 0);
    for (size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
    return m;
  }();
  // reflection matrix columns: images of basis vectors
  BasisTag tag = simple[0].basis;
  std::vector<Matrix> gens;
  for (const auto& s : simple) {
    Matrix m(dim * dim, 0);
    for (size_t j = 0; j < dim; ++j) {
      HomologyClass ej = basis_class(tag, static_cast<int>(j));
      HomologyClass img = reflect(ej, s);
      for (size_t i = 0; i < dim; ++i) m[i * dim + j] = img.coeffs[i];
    }
    gens.push_back(std::move(m));
  }
  auto mul = [&](const Matrix& a, const Matrix& b) {
    Matrix c(dim * dim, 0);
    for (size_t i = 0; i < dim; ++i)
      for (size_t l = 0; l < dim; ++l) {
        const Int& ail = a[i * dim + l];
        if (ail == 0) continue;
        for (size_t j = 0; j < dim; ++j) c[i * dim + j] += ail * b[l * dim + j];
      }
    return c;
  };
  std::set<Matrix> seen{identity};
  std::vector<Matrix> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Matrix h = mul(g, f);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace cktest
