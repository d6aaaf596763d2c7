#include "chamberkit/packing.hpp"

#include <algorithm>

#include "chamberkit/reduction.hpp"

namespace ck {

PackingResult relative_packing_feasible(const PackingSpec& spec) {
  PackingResult res;
  std::array<Rat, 5> c = spec.sizes;
  for (const auto& x : c)
    if (x <= 0) {
      res.reason = "sizes must be positive";
      return res;
    }
  std::sort(c.begin(), c.end(), [](const Rat& a, const Rat& b) { return a > b; });

  Rat sum = 0;
  for (const auto& x : c) sum += x;
  if (c[0] > Rat(1, 2)) {
    res.reason = "max size exceeds 1/2";
    return res;
  }
  if (sum >= 2) {
    res.reason = "sizes sum to 2 or more";
    return res;
  }

  // Blow up the largest ball inside (S^2 x S^2, Omega_{1,1/2}): the residual
  // class is (3/2-c1)H - (1-c1)E1 - c2 E2 - ... - c5 E5 - (1/2-c1)E6.
  std::vector<Rat> areas = {1 - c[0], c[1], c[2], c[3], c[4], Rat(1, 2) - c[0]};
  res.certificate = make_h_form(6, Rat(3, 2) - c[0], areas);

  bool first = true;
  auto consider = [&](const Rat& v) {
    if (first || v < res.min_slack) res.min_slack = v;
    first = false;
  };
  for (int i = 1; i <= 6; ++i) consider(area(res.certificate, e_class(6, i)));
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      std::vector<Int> a(6, 0);
      a[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(j - 1)] = 1;
      consider(area(res.certificate, make_h_class(6, 1, a)));
    }
  for (int i = 1; i <= 6; ++i) {
    std::vector<Int> a(6, 1);
    a[static_cast<size_t>(i - 1)] = 0;
    consider(area(res.certificate, make_h_class(6, 2, a)));
  }
  if (res.min_slack < 0) {
    res.reason = "certificate pairs an exceptional class negatively";
    return res;
  }
  res.feasible = true;
  res.boundary = c[0] == Rat(1, 2) || res.min_slack == 0;
  return res;
}

CremonaResult cremona_to_packing_form(const FormClass& w) {
  if (w.basis.kind != BasisKind::H || w.basis.blowups != 5)
    fail(Err::WrongK, "the packing Cremona move is defined for k = 5");
  if (!is_reduced(w)) fail(Err::NotReduced, "form must be reduced");
  Rat c1 = w.blowup_area(1), c2 = w.blowup_area(2), c3 = w.blowup_area(3),
      c4 = w.blowup_area(4), c5 = w.blowup_area(5);

  int branch;
  if (c3 < c4 + c5)
    branch = 3;
  else if (c2 < c3 + c4)
    branch = 2;
  else if (c1 < c2 + c3)
    branch = 1;
  else
    fail(Err::NotBalanced, "no Cremona branch applies: form is not balanced");

  // Reflection in H - E_b - E_{b+1} - E_{b+2}; the new basis classes are the
  // reflection images of the old ones.
  std::vector<Int> a(5, 0);
  a[static_cast<size_t>(branch - 1)] = a[static_cast<size_t>(branch)] =
      a[static_cast<size_t>(branch + 1)] = 1;
  CremonaResult res;
  res.branch = branch;
  res.root = make_h_class(5, 1, a);
  res.pushed = reflect(w, res.root);

  res.basis_map.emplace_back("h", reflect(h_class(5), res.root));
  for (int i = 1; i <= 5; ++i)
    res.basis_map.emplace_back("e" + std::to_string(i), reflect(e_class(5, i), res.root));

  const HomologyClass& h_new = res.basis_map[0].second;
  for (int i = 1; i <= 5; ++i) {
    HomologyClass check = h_new - res.basis_map[static_cast<size_t>(i)].second.scaled(2);
    res.h_minus_2e[static_cast<size_t>(i - 1)] = area(w, check);
  }
  FormClass normalized_pushed = normalize(res.pushed);
  for (int i = 1; i <= 5; ++i)
    res.sizes[static_cast<size_t>(i - 1)] = normalized_pushed.blowup_area(i);
  return res;
}

}  // namespace ck
