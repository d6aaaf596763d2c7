#include "chamberkit/reduction.hpp"

#include <sstream>

namespace ck {

bool is_reduced(const FormClass& w) {
  if (w.basis.kind != BasisKind::H) fail(Err::WrongBasis, "is_reduced expects the H basis");
  int k = w.basis.blowups;
  Rat nu = w.coeffs[0];
  if (k == 0) return nu > 0;
  std::vector<Rat> c(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) c[static_cast<size_t>(i - 1)] = w.blowup_area(i);
  for (int i = 0; i + 1 < k; ++i)
    if (c[static_cast<size_t>(i)] < c[static_cast<size_t>(i + 1)]) return false;
  if (c[static_cast<size_t>(k - 1)] <= 0) return false;
  if (k == 1) return nu > c[0];
  if (k == 2) return c[0] + c[1] < nu;
  if (nu <= c[0]) return false;
  return c[0] + c[1] + c[2] <= nu;
}

bool is_reduced_bf(const FormClass& w) {
  if (w.basis.kind != BasisKind::BF) fail(Err::WrongBasis, "is_reduced_bf expects the BF basis");
  int n = w.basis.blowups;
  Rat mu = w.coeffs[1];  // omega(B)
  Rat f = w.coeffs[0];   // omega(F)
  if (f <= 0) return false;
  if (mu < f) return false;
  if (n == 0) return true;
  std::vector<Rat> a(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i - 1)] = w.blowup_area(i);
  if (a[0] > f) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (a[static_cast<size_t>(i)] < a[static_cast<size_t>(i + 1)]) return false;
  if (a[static_cast<size_t>(n - 1)] <= 0) return false;
  if (n >= 2 && a[0] + a[1] > f) return false;
  return true;
}

bool is_balanced(const FormClass& w) {
  if (w.basis.kind != BasisKind::H || w.basis.blowups != 5)
    fail(Err::WrongK, "is_balanced is defined for reduced forms with k = 5");
  if (!is_reduced(w)) fail(Err::NotReduced, "is_balanced expects a reduced form");
  Rat c1 = w.blowup_area(1), c2 = w.blowup_area(2), c3 = w.blowup_area(3),
      c4 = w.blowup_area(4), c5 = w.blowup_area(5);
  return !(c1 >= c2 + c3 && c2 >= c3 + c4 && c3 >= c4 + c5);
}

HomologyClass reflect(const HomologyClass& x, const HomologyClass& root) {
  if (pairing(root, root) != -2) fail(Err::NotARoot, "reflection class must have square -2");
  return x + root.scaled(pairing(x, root));
}

FormClass reflect(const FormClass& x, const HomologyClass& root) {
  if (pairing(root, root) != -2) fail(Err::NotARoot, "reflection class must have square -2");
  Rat t = pairing(x, root);
  FormClass r = x;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += t * Rat(root.coeffs[i]);
  return r;
}

namespace {

FormClass apply_step(const FormClass& w, const ReductionStep& s) {
  if (s.kind == ReductionStep::Reflect) return reflect(w, s.root);
  FormClass r = w;
  std::swap(r.coeffs[static_cast<size_t>(s.i)], r.coeffs[static_cast<size_t>(s.j)]);
  return r;
}

}  // namespace

FormClass ReductionTrace::apply(const FormClass& w) const {
  FormClass cur = w;
  for (const auto& s : steps) cur = apply_step(cur, s);
  return cur;
}

FormClass ReductionTrace::replay() const { return apply(start); }

std::string ReductionTrace::to_log() const {
  std::ostringstream os;
  os << "START " << form_to_string(start) << "\n";
  for (const auto& s : steps) {
    if (s.kind == ReductionStep::Reflect)
      os << "REFLECT " << class_to_string(s.root) << "\n";
    else
      os << "PERMUTE " << s.i << " " << s.j << "\n";
  }
  os << "END " << form_to_string(end) << "\n";
  return os.str();
}

ReductionTrace trace_from_log(const std::string& log) {
  ReductionTrace tr;
  bool have_start = false, have_end = false;
  std::istringstream is(log);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string verb;
    ls >> verb;
    std::string rest;
    std::getline(ls, rest);
    if (verb == "START") {
      tr.start = parse_form(rest);
      have_start = true;
    } else if (verb == "END") {
      tr.end = parse_form(rest);
      have_end = true;
    } else if (verb == "REFLECT") {
      if (!have_start) fail(Err::ParseError, "REFLECT before START");
      tr.steps.push_back(
          ReductionStep{ReductionStep::Reflect, parse_class(rest, tr.start.basis), 0, 0});
    } else if (verb == "PERMUTE") {
      std::istringstream rs(rest);
      int i = 0, j = 0;
      rs >> i >> j;
      if (i <= 0 || j <= 0) fail(Err::ParseError, "bad PERMUTE line: " + line);
      tr.steps.push_back(ReductionStep{ReductionStep::Permute, HomologyClass{}, i, j});
    } else {
      fail(Err::ParseError, "unknown trace verb: " + verb);
    }
  }
  if (!have_start || !have_end) fail(Err::ParseError, "trace log must have START and END lines");
  return tr;
}

ReductionResult reduce_to_fundamental_domain(const FormClass& w_in) {
  if (w_in.basis.kind != BasisKind::H)
    fail(Err::WrongBasis, "reduction runs in the H basis");
  int k = w_in.basis.blowups;
  if (k > 8) fail(Err::OutOfRange, "reduction defined for k <= 8 (finite Weyl group)");
  if (form_square(w_in) <= 0)
    fail(Err::NotReducible, "class has non-positive square");

  ReductionResult res;
  FormClass w = w_in;
  if (w.coeffs[0] < 0) {
    for (auto& c : w.coeffs) c = -c;
    res.sign_flipped = true;
  }
  if (w.coeffs[0] == 0) fail(Err::NotReducible, "class has zero area on H");
  res.trace.start = w;

  auto c_at = [&](int i) { return -w.coeffs[static_cast<size_t>(i)]; };  // c_i, 1-based

  long iterations = 0;
  bool progressed = true;
  while (progressed) {
    if (++iterations > kReductionIterationCap)
      fail(Err::NotReducible, "descent did not terminate within the iteration cap");
    progressed = false;
    // Stable descending pass over the c_i (adjacent transpositions only).
    for (int i = 1; i + 1 <= k; ++i) {
      if (c_at(i) < c_at(i + 1)) {
        std::swap(w.coeffs[static_cast<size_t>(i)], w.coeffs[static_cast<size_t>(i + 1)]);
        res.trace.steps.push_back(ReductionStep{ReductionStep::Permute, HomologyClass{}, i, i + 1});
        progressed = true;
      }
    }
    if (progressed) continue;
    if (k >= 3 && c_at(1) + c_at(2) + c_at(3) > w.coeffs[0]) {
      HomologyClass root = make_h_class(k, 1, [&] {
        std::vector<Int> a(static_cast<size_t>(k), 0);
        a[0] = a[1] = a[2] = 1;
        return a;
      }());
      w = reflect(w, root);
      res.trace.steps.push_back(ReductionStep{ReductionStep::Reflect, root, 0, 0});
      progressed = true;
      if (w.coeffs[0] <= 0)
        fail(Err::NotReducible, "descent drove the H area non-positive; class not in the "
                                "symplectic cone with canonical K");
    }
  }

  // Dominant point reached: sorted and (k >= 3) c1+c2+c3 <= nu.  Classify.
  Rat nu = w.coeffs[0];
  res.trace.end = w;
  res.form = w;
  if (k >= 1 && c_at(k) < 0)
    fail(Err::NotReducible, "dominant representative pairs E" + std::to_string(k) +
                                " negatively; class not in the symplectic cone");
  if (k >= 1 && c_at(1) >= nu)
    fail(Err::NotReducible, "dominant representative has c1 >= nu");
  if (k == 2 && c_at(1) + c_at(2) > nu)
    fail(Err::NotReducible, "dominant representative has c1+c2 > nu for k = 2");
  for (int i = 1; i <= k; ++i)
    if (c_at(i) == 0) {
      res.degenerate = true;
      res.vanished.push_back("E" + std::to_string(i));
    }
  if (k == 2 && c_at(1) + c_at(2) == nu) {
    res.degenerate = true;
    res.vanished.push_back("H-E1-E2");
  }
  return res;
}

}  // namespace ck
