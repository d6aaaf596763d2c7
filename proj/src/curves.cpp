#include "chamberkit/curves.hpp"

#include <algorithm>

#include "chamberkit/reduction.hpp"

namespace ck {

ConstraintReport passes_constraints(const HomologyClass& a, const FormClass& w) {
  if (a.basis.kind != BasisKind::BF || !(a.basis == w.basis))
    fail(Err::WrongBasis, "passes_constraints works in the shared BF basis");
  if (a.basis.blowups > 4) fail(Err::OutOfRange, "n <= 4");
  if (!is_reduced_bf(w)) fail(Err::NotReduced, "form must be reduced (BF conditions)");
  ConstraintReport rep;
  rep.area_ok = area(w, a) > 0;
  Int p = a.coeffs[0], q = a.coeffs[1];
  Int sum_rr = 0;
  for (int i = 2; i < a.basis.dimension(); ++i) {
    Int r = -a.coeffs[static_cast<size_t>(i)];
    sum_rr += r * (r - 1);
  }
  rep.adjunction_value = 2 * (p - 1) * (q - 1) - sum_rr;
  rep.genus = virtual_genus(a);
  return rep;
}

AuditReport lemma_classes_audit(const FormClass& w, int bound) {
  if (w.basis.kind != BasisKind::BF) fail(Err::WrongBasis, "audit works in the BF basis");
  int n = w.basis.blowups;
  if (n > 4) fail(Err::OutOfRange, "n <= 4");
  if (bound < 1) fail(Err::OutOfRange, "bound must be >= 1");
  AuditReport rep;
  rep.precondition_ok = is_reduced_bf(w);

  // Scale the areas to a common denominator so the scan runs on machine
  // integers; coefficients are bounded by `bound`, so no overflow for any
  // realistic denominator.
  Int den = 1;
  for (const auto& c : w.coeffs) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<long long> weight(w.coeffs.size());
  for (size_t i = 0; i < w.coeffs.size(); ++i) {
    Int scaled = numerator(w.coeffs[i]) * (den / denominator(w.coeffs[i]));
    if (scaled > Int(1) << 40 || scaled < -(Int(1) << 40))
      fail(Err::OutOfRange, "form denominators too large for the audit kernel");
    weight[i] = scaled.convert_to<long long>();
  }
  long long wb = weight[1], wf = weight[0];  // omega(B), omega(F) (PD coeffs swap)
  std::vector<long long> we(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) we[static_cast<size_t>(i)] = -weight[static_cast<size_t>(i + 2)];

  std::vector<int> r(static_cast<size_t>(n), -bound - 1);
  for (int p = -bound; p <= bound; ++p) {
    for (int q = -bound; q <= bound; ++q) {
      long long base_area = p * wb + q * wf;
      long long base_adj = 2LL * (p - 1) * (q - 1);
      // Odometer over the r vector.
      std::fill(r.begin(), r.end(), -bound);
      while (true) {
        long long ar = base_area;
        long long adj = base_adj;
        for (int i = 0; i < n; ++i) {
          long long ri = r[static_cast<size_t>(i)];
          ar -= ri * we[static_cast<size_t>(i)];
          adj -= ri * (ri - 1);
        }
        if (ar > 0 && adj >= 0) {
          ++rep.candidates;
          bool ok = p >= 0;
          if (ok && p == 0) ok = q == 0 || q == 1;
          if (ok && p == 1)
            for (int i = 0; ok && i < n; ++i)
              ok = r[static_cast<size_t>(i)] == 0 || r[static_cast<size_t>(i)] == 1;
          if (ok && p > 1) ok = q >= 1;
          if (!ok) {
            ++rep.violations;
            if (rep.counterexamples.size() < 32) {
              std::vector<Int> ri(r.begin(), r.end());
              rep.counterexamples.push_back(make_bf_class(n, p, q, ri));
            }
          }
        }
        int pos = 0;
        while (pos < n && r[static_cast<size_t>(pos)] == bound) {
          r[static_cast<size_t>(pos)] = -bound;
          ++pos;
        }
        if (pos == n) break;
        ++r[static_cast<size_t>(pos)];
      }
    }
  }
  return rep;
}

namespace {

void push_member(std::vector<NegativeSphereFamily>& fams, FamilyKind kind,
                 const HomologyClass& a, const FormClass& w) {
  if (pairing(a, a) >= 0) return;
  if (area(w, a) <= 0) return;
  auto rep = passes_constraints(a, w);
  auto& fam = fams[static_cast<size_t>(kind)];
  if (rep.adjunction_value == 0)
    fam.members.push_back(a);
  else if (rep.adjunction_value > 0)
    fam.higher_genus_candidates.push_back(a);
}

}  // namespace

std::vector<NegativeSphereFamily> enumerate_negative_spheres(const FormClass& w) {
  if (w.basis.kind != BasisKind::BF)
    fail(Err::WrongBasis, "negative sphere families live in the BF basis");
  int n = w.basis.blowups;
  if (n > 4) fail(Err::OutOfRange, "n <= 4");
  if (!is_reduced_bf(w)) fail(Err::NotReduced, "form must be reduced (BF conditions)");
  Rat mu = w.coeffs[1], f = w.coeffs[0];

  std::vector<NegativeSphereFamily> fams{{FamilyKind::BClass, {}, {}},
                                         {FamilyKind::FClass, {}, {}},
                                         {FamilyKind::EClass, {}, {}}};
  // k bound from area positivity: 1*mu - k*f - sum r_i a_i > 0.
  Rat ratio = mu / f;
  long kmax = (numerator(ratio) / denominator(ratio)).convert_to<long>() + 4;
  for (long k = -1; k <= kmax; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Int> r(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) r[static_cast<size_t>(i)] = 1;
      push_member(fams, FamilyKind::BClass, make_bf_class(n, 1, Int(-k), r), w);
      if (k == 0) push_member(fams, FamilyKind::FClass, make_bf_class(n, 0, 1, r), w);
    }
  }
  for (int j = 1; j <= n; ++j) {
    int rest = n - j;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
      std::vector<Int> r(static_cast<size_t>(n), 0);
      r[static_cast<size_t>(j - 1)] = -1;
      for (int i = 0; i < rest; ++i)
        if (mask & (1u << i)) r[static_cast<size_t>(j + i)] = 1;
      push_member(fams, FamilyKind::EClass, make_bf_class(n, 0, 0, r), w);
    }
  }
  for (auto& fam : fams) {
    std::sort(fam.members.begin(), fam.members.end());
    std::sort(fam.higher_genus_candidates.begin(), fam.higher_genus_candidates.end());
  }
  return fams;
}

std::vector<HomologyClass> square_zero_spheres(int n) {
  if (n < 0 || n > 4) fail(Err::OutOfRange, "square-zero list defined for n <= 4");
  std::vector<HomologyClass> out;
  out.push_back(b_class(n));
  out.push_back(f_class(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Int> r(static_cast<size_t>(n), 0);
      r[static_cast<size_t>(i - 1)] = r[static_cast<size_t>(j - 1)] = 1;
      out.push_back(make_bf_class(n, 1, 1, r));
    }
  if (n == 4) {
    std::vector<Int> ones(4, 1);
    out.push_back(make_bf_class(4, 2, 1, ones));
    out.push_back(make_bf_class(4, 1, 2, ones));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<HomologyClass, Rat> min_exceptional_area(const FormClass& w) {
  if (w.basis.kind != BasisKind::H)
    fail(Err::WrongBasis, "min_exceptional_area expects the H basis");
  int k = w.basis.blowups;
  if (k < 1 || k > 8) fail(Err::OutOfRange, "1 <= k <= 8");
  if (!is_reduced(w)) fail(Err::NotReduced, "form must be reduced");
  auto exc = enumerate_exceptional(k);
  Rat best;
  HomologyClass best_class;
  bool first = true;
  for (const auto& a : exc.classes) {
    Rat v = area(w, a);
    if (first || v < best) {
      best = v;
      best_class = a;
      first = false;
    }
  }
  HomologyClass ek = e_class(k, k);
  if (area(w, ek) == best) return {ek, best};
  // E_k is minimal whenever the triple condition nu >= c_i+c_j+c_l is
  // available (k >= 3, and trivially k = 1).  At k = 2 the class H-E1-E2 can
  // be strictly smaller, e.g. (1|9/20,9/20); return the true minimizer.
  if (k != 2) throw std::logic_error("E_k does not attain the minimal exceptional area");
  return {best_class, best};
}

namespace {

// every negative-square (<= -2) class among `candidates` must pair at least
// one configuration member negatively
void verify_open_configuration(const std::vector<HomologyClass>& config,
                               const std::vector<HomologyClass>& candidates) {
  for (const auto& c : candidates) {
    if (pairing(c, c) > -2) continue;
    bool hit = false;
    for (const auto& m : config)
      if (pairing(c, m) < 0) {
        hit = true;
        break;
      }
    if (!hit)
      fail(Err::OutOfRange,
           "configuration misses the negative class " + class_to_string(c));
  }
}

std::vector<HomologyClass> bf_family_candidates(int n, int kbound) {
  std::vector<HomologyClass> out;
  for (long k = -1; k <= kbound; ++k)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Int> r(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) r[static_cast<size_t>(i)] = 1;
      out.push_back(make_bf_class(n, 1, Int(-k), r));
      if (k == 0) out.push_back(make_bf_class(n, 0, 1, r));
    }
  for (int j = 1; j <= n; ++j) {
    int rest = n - j;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
      std::vector<Int> r(static_cast<size_t>(n), 0);
      r[static_cast<size_t>(j - 1)] = -1;
      for (int i = 0; i < rest; ++i)
        if (mask & (1u << i)) r[static_cast<size_t>(j + i)] = 1;
      out.push_back(make_bf_class(n, 0, 0, r));
    }
  }
  return out;
}

}  // namespace

std::vector<HomologyClass> minimal_open_configuration(const BasisTag& tag) {
  std::vector<HomologyClass> config;
  if (tag.kind == BasisKind::H) {
    int k = tag.blowups;
    auto H = [&](const Int& d, std::vector<Int> a) { return make_h_class(k, d, a); };
    switch (k) {
      case 2:
        config = {e_class(2, 1)};
        break;
      case 3:
        config = {e_class(3, 1), e_class(3, 2), H(1, {0, 1, 1})};
        break;
      case 4:
        config = {H(1, {1, 1, 0, 0}), H(1, {0, 0, 1, 1}), e_class(4, 1), e_class(4, 3)};
        break;
      case 5:
        config = {H(2, {1, 1, 1, 1, 1}), e_class(5, 1), e_class(5, 2), e_class(5, 3),
                  e_class(5, 4)};
        break;
      default:
        fail(Err::OutOfRange, "H-basis configurations listed for 2 <= k <= 5");
    }
    verify_open_configuration(config, positive_roots(k));
    return config;
  }
  int n = tag.blowups;
  auto BF = [&](const Int& p, const Int& q, std::vector<Int> r) {
    return make_bf_class(n, p, q, r);
  };
  switch (n) {
    case 1:
      config = {BF(1, 0, {1})};  // B - E
      break;
    case 2:
      config = {e_class_bf(2, 1), BF(1, 0, {1, 0}), BF(0, 1, {1, 0})};
      break;
    case 3:
      // F-E1 in place of E1 would leave E1-E2 unpaired; this set is the base
      // change of the 4-blow-up H-basis set and passes the kill-check below.
      config = {e_class_bf(3, 1), e_class_bf(3, 2), BF(1, 0, {1, 0, 0}),
                BF(1, 1, {1, 1, 1})};
      break;
    case 4:
      config = {BF(1, 1, {0, 1, 1, 1}), BF(1, 0, {1, 0, 0, 0}), BF(0, 1, {1, 0, 0, 0}),
                e_class_bf(4, 2), e_class_bf(4, 3)};
      break;
    default:
      fail(Err::OutOfRange, "BF-basis configurations listed for 1 <= n <= 4");
  }
  verify_open_configuration(config, bf_family_candidates(n, 3));
  return config;
}

}  // namespace ck
