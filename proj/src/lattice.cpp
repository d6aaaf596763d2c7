#include "chamberkit/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ck {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string int_to_string(const Int& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.find('.') != std::string::npos)
    fail(Err::ParseError, "decimal literal '" + text + "'; use exact rationals like 1/2");
  if (s.empty()) fail(Err::ParseError, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Err::ParseError, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad rational '" + text + "'");
  }
}

const char* err_name(Err e) {
  switch (e) {
    case Err::BasisMismatch: return "BasisMismatch";
    case Err::NotARoot: return "NotARoot";
    case Err::NotReduced: return "NotReduced";
    case Err::NotNormalized: return "NotNormalized";
    case Err::NotReducible: return "NotReducible";
    case Err::NotBalanced: return "NotBalanced";
    case Err::OutOfRange: return "OutOfRange";
    case Err::WrongBasis: return "WrongBasis";
    case Err::WrongK: return "WrongK";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::NotSimpleSystem: return "NotSimpleSystem";
    case Err::UnrecognizedDiagram: return "UnrecognizedDiagram";
    case Err::ZeroArea: return "ZeroArea";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool BasisTag::same_manifold(const BasisTag& o) const {
  if (*this == o) return true;
  const BasisTag& h = kind == BasisKind::H ? *this : o;
  const BasisTag& bf = kind == BasisKind::H ? o : *this;
  if (h.kind != BasisKind::H || bf.kind != BasisKind::BF) return false;
  return h.blowups >= 2 && bf.blowups == h.blowups - 1;
}

std::string BasisTag::to_string() const {
  return (kind == BasisKind::H ? "HBasis(" : "BFBasis(") + std::to_string(blowups) + ")";
}

static void check_same_tag(const BasisTag& a, const BasisTag& b) {
  if (!(a == b)) fail(Err::BasisMismatch, a.to_string() + " vs " + b.to_string());
}

bool HomologyClass::operator<(const HomologyClass& o) const {
  check_same_tag(basis, o.basis);
  return coeffs < o.coeffs;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  check_same_tag(basis, o.basis);
  HomologyClass r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
  check_same_tag(basis, o.basis);
  HomologyClass r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

HomologyClass HomologyClass::scaled(const Int& s) const {
  HomologyClass r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

std::string HomologyClass::to_string() const { return class_to_string(*this); }

Rat FormClass::scale_area() const { return coeffs[0]; }

Rat FormClass::blowup_area(int i) const {
  int off = basis.kind == BasisKind::H ? 0 : 1;
  if (i < 1 || i > basis.blowups) fail(Err::OutOfRange, "blow-up index " + std::to_string(i));
  return -coeffs[static_cast<size_t>(off + i)];
}

std::string FormClass::to_string() const { return form_to_string(*this); }

HomologyClass basis_class(const BasisTag& tag, int index) {
  if (index < 0 || index >= tag.dimension()) fail(Err::OutOfRange, "basis index");
  HomologyClass a{std::vector<Int>(static_cast<size_t>(tag.dimension()), 0), tag};
  a.coeffs[static_cast<size_t>(index)] = 1;
  return a;
}

HomologyClass h_class(int k) { return basis_class(h_basis(k), 0); }
HomologyClass e_class(int k, int i) { return basis_class(h_basis(k), i); }
HomologyClass b_class(int n) { return basis_class(bf_basis(n), 0); }
HomologyClass f_class(int n) { return basis_class(bf_basis(n), 1); }
HomologyClass e_class_bf(int n, int i) { return basis_class(bf_basis(n), i + 1); }
HomologyClass zero_class(const BasisTag& tag) {
  return HomologyClass{std::vector<Int>(static_cast<size_t>(tag.dimension()), 0), tag};
}

HomologyClass make_h_class(int k, const Int& d, const std::vector<Int>& a) {
  if (static_cast<int>(a.size()) != k) fail(Err::OutOfRange, "coefficient count");
  HomologyClass r = zero_class(h_basis(k));
  r.coeffs[0] = d;
  for (int i = 0; i < k; ++i) r.coeffs[static_cast<size_t>(i + 1)] = -a[static_cast<size_t>(i)];
  return r;
}

HomologyClass make_bf_class(int n, const Int& p, const Int& q, const std::vector<Int>& r) {
  if (static_cast<int>(r.size()) != n) fail(Err::OutOfRange, "coefficient count");
  HomologyClass a = zero_class(bf_basis(n));
  a.coeffs[0] = p;
  a.coeffs[1] = q;
  for (int i = 0; i < n; ++i) a.coeffs[static_cast<size_t>(i + 2)] = -r[static_cast<size_t>(i)];
  return a;
}

FormClass make_h_form(int k, const Rat& nu, const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != k) fail(Err::OutOfRange, "area count");
  FormClass w{std::vector<Rat>(static_cast<size_t>(k + 1)), h_basis(k)};
  w.coeffs[0] = nu;
  for (int i = 0; i < k; ++i) w.coeffs[static_cast<size_t>(i + 1)] = -c[static_cast<size_t>(i)];
  return w;
}

FormClass make_bf_form(int n, const Rat& area_b, const Rat& area_f, const std::vector<Rat>& a) {
  if (static_cast<int>(a.size()) != n) fail(Err::OutOfRange, "area count");
  FormClass w{std::vector<Rat>(static_cast<size_t>(n + 2)), bf_basis(n)};
  // <xB + yF, B> = y and <xB + yF, F> = x, so the stored PD coefficients swap.
  w.coeffs[0] = area_f;
  w.coeffs[1] = area_b;
  for (int i = 0; i < n; ++i) w.coeffs[static_cast<size_t>(i + 2)] = -a[static_cast<size_t>(i)];
  return w;
}

HomologyClass canonical_class(const BasisTag& tag) {
  HomologyClass k = zero_class(tag);
  if (tag.kind == BasisKind::H) {
    k.coeffs[0] = -3;
    for (int i = 1; i <= tag.blowups; ++i) k.coeffs[static_cast<size_t>(i)] = 1;
  } else {
    k.coeffs[0] = -2;
    k.coeffs[1] = -2;
    for (int i = 2; i < tag.dimension(); ++i) k.coeffs[static_cast<size_t>(i)] = 1;
  }
  return k;
}

namespace {

// Gram matrix action: H basis diag(1,-1,...,-1); BF basis hyperbolic block
// on (B,F) plus diag(-1,...).
template <class R>
R pair_impl(const std::vector<R>& a, const std::vector<R>& b, BasisKind kind) {
  R acc = 0;
  size_t start;
  if (kind == BasisKind::H) {
    acc += a[0] * b[0];
    start = 1;
  } else {
    acc += a[0] * b[1];
    acc += a[1] * b[0];
    start = 2;
  }
  for (size_t i = start; i < a.size(); ++i) acc -= a[i] * b[i];
  return acc;
}

}  // namespace

Int pairing(const HomologyClass& a, const HomologyClass& b) {
  check_same_tag(a.basis, b.basis);
  return pair_impl(a.coeffs, b.coeffs, a.basis.kind);
}

Rat pairing(const FormClass& a, const HomologyClass& b) {
  check_same_tag(a.basis, b.basis);
  std::vector<Rat> bb(b.coeffs.size());
  for (size_t i = 0; i < bb.size(); ++i) bb[i] = Rat(b.coeffs[i]);
  return pair_impl(a.coeffs, bb, a.basis.kind);
}

Rat pairing(const FormClass& a, const FormClass& b) {
  check_same_tag(a.basis, b.basis);
  return pair_impl(a.coeffs, b.coeffs, a.basis.kind);
}

Rat form_square(const FormClass& w) { return pairing(w, w); }

Rat virtual_genus(const HomologyClass& a) {
  Int sq = pairing(a, a);
  Int ka = pairing(canonical_class(a.basis), a);
  return Rat(sq + ka, 2) + 1;
}

namespace {

// Transition HBasis(k) -> BFBasis(k-1), valid for k >= 2:
//   dH - sum a_i E_i = (d-a1) B + (d-a2) F - (d-a1-a2) E'_1 - sum_{j>=3} a_j E'_{j-1}
template <class T>
std::vector<T> h_to_bf(const std::vector<T>& v) {
  size_t dim = v.size();  // dimensions agree: (k+1) == (k-1)+2
  std::vector<T> out(dim);
  const T& d = v[0];
  T a1 = -v[1];
  T a2 = -v[2];
  out[0] = d - a1;
  out[1] = d - a2;
  out[2] = -(d - a1 - a2);
  for (size_t j = 3; j < dim; ++j) out[j] = v[j];
  return out;
}

//   pB + qF - sum r_i E'_i = (p+q-r1) H - (q-r1) E1 - (p-r1) E2 - sum_{i>=2} r_i E_{i+1}
template <class T>
std::vector<T> bf_to_h(const std::vector<T>& v) {
  size_t dim = v.size();
  std::vector<T> out(dim);
  const T& p = v[0];
  const T& q = v[1];
  T r1 = -v[2];
  out[0] = p + q - r1;
  out[1] = -(q - r1);
  out[2] = -(p - r1);
  for (size_t i = 3; i < dim; ++i) out[i] = v[i];
  return out;
}

template <class T>
std::vector<T> convert(const std::vector<T>& v, const BasisTag& from, const BasisTag& to) {
  if (from == to) return v;
  if (!from.same_manifold(to))
    fail(Err::BasisMismatch,
         "no basis change between " + from.to_string() + " and " + to.to_string());
  return from.kind == BasisKind::H ? h_to_bf(v) : bf_to_h(v);
}

}  // namespace

HomologyClass change_basis(const HomologyClass& x, const BasisTag& target) {
  return HomologyClass{convert(x.coeffs, x.basis, target), target};
}

FormClass change_basis(const FormClass& x, const BasisTag& target) {
  return FormClass{convert(x.coeffs, x.basis, target), target};
}

FormClass normalize(const FormClass& w) {
  Rat s = w.scale_area();
  if (s == 0)
    fail(Err::ZeroArea, w.basis.kind == BasisKind::H ? "form has zero area on H"
                                                     : "form has zero area on F");
  FormClass r = w;
  for (auto& c : r.coeffs) c /= s;
  return r;
}

// ---------------------------------------------------------------------------
// Textual literals.

namespace {

std::vector<std::string> basis_symbols(const BasisTag& tag) {
  std::vector<std::string> syms;
  if (tag.kind == BasisKind::H) {
    syms.push_back("H");
  } else {
    syms.push_back("B");
    syms.push_back("F");
  }
  for (int i = 1; i <= tag.blowups; ++i) syms.push_back("E" + std::to_string(i));
  return syms;
}

}  // namespace

std::string class_to_string(const HomologyClass& a) {
  auto syms = basis_symbols(a.basis);
  std::string out;
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    const Int& c = a.coeffs[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += int_to_string(mag);
    out += syms[i];
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Term {
  Int coeff;
  std::string sym;
};

std::vector<Term> tokenize_terms(const std::string& text) {
  std::vector<Term> terms;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(Err::ParseError, "expected '+' or '-' in class literal '" + text + "'");
    }
    skip_ws();
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    skip_ws();
    if (i >= text.size()) {
      if (first && digits == "0") return terms;  // the zero class
      fail(Err::ParseError, "dangling coefficient in '" + text + "'");
    }
    std::string sym;
    char c = text[i];
    if (c == 'H' || c == 'B' || c == 'F') {
      sym = std::string(1, c);
      ++i;
    } else if (c == 'E') {
      sym = "E";
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) sym += text[i++];
      if (sym == "E") fail(Err::ParseError, "E without index in '" + text + "'");
    } else {
      fail(Err::ParseError, std::string("unexpected symbol '") + c + "' in '" + text + "'");
    }
    // strip leading zeros: bare cpp_int would read "08" as bad octal
    while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    terms.push_back(Term{sign < 0 ? Int(-coeff) : coeff, sym});
    first = false;
    skip_ws();
  }
  if (first) fail(Err::ParseError, "empty class literal");
  return terms;
}

}  // namespace

HomologyClass parse_class(const std::string& text, const BasisTag& tag) {
  auto terms = tokenize_terms(text);
  auto syms = basis_symbols(tag);
  HomologyClass a = zero_class(tag);
  for (const auto& t : terms) {
    auto it = std::find(syms.begin(), syms.end(), t.sym);
    if (it == syms.end())
      fail(Err::ParseError, "symbol " + t.sym + " not in basis " + tag.to_string());
    a.coeffs[static_cast<size_t>(it - syms.begin())] += t.coeff;
  }
  return a;
}

HomologyClass parse_class(const std::string& text) {
  auto terms = tokenize_terms(text);
  bool has_h = false, has_bf = false;
  int max_e = 0;
  for (const auto& t : terms) {
    if (t.sym == "H") has_h = true;
    if (t.sym == "B" || t.sym == "F") has_bf = true;
    if (t.sym[0] == 'E') {
      if (t.sym.size() > 3) fail(Err::ParseError, "blow-up index out of range: " + t.sym);
      max_e = std::max(max_e, std::stoi(t.sym.substr(1)));
    }
  }
  if (has_h && has_bf) fail(Err::ParseError, "mixed H and B/F symbols in '" + text + "'");
  BasisTag tag = has_bf ? bf_basis(max_e) : h_basis(max_e);
  return parse_class(text, tag);
}

std::string form_to_string(const FormClass& w) {
  std::string out = "(";
  if (w.basis.kind == BasisKind::H) {
    out += rat_to_string(w.coeffs[0]);
  } else {
    out += rat_to_string(w.coeffs[1]);  // area of B
    out += ",";
    out += rat_to_string(w.coeffs[0]);  // area of F
  }
  out += "|";
  for (int i = 1; i <= w.basis.blowups; ++i) {
    if (i > 1) out += ",";
    out += rat_to_string(w.blowup_area(i));
  }
  out += ")";
  return out;
}

FormClass parse_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    fail(Err::ParseError, "form literal must look like (nu|c1,...) : '" + text + "'");
  s = s.substr(1, s.size() - 2);
  auto bar = s.find('|');
  if (bar == std::string::npos) fail(Err::ParseError, "missing '|' in form literal '" + text + "'");
  std::string head = s.substr(0, bar);
  std::string tail = s.substr(bar + 1);
  auto split = [](const std::string& str) {
    std::vector<std::string> parts;
    if (str.empty()) return parts;
    size_t start = 0;
    while (true) {
      auto comma = str.find(',', start);
      if (comma == std::string::npos) {
        parts.push_back(str.substr(start));
        break;
      }
      parts.push_back(str.substr(start, comma - start));
      start = comma + 1;
    }
    return parts;
  };
  auto head_parts = split(head);
  auto tail_parts = split(tail);
  std::vector<Rat> areas;
  areas.reserve(tail_parts.size());
  for (const auto& p : tail_parts) areas.push_back(parse_rational(p));
  int n = static_cast<int>(areas.size());
  if (head_parts.size() == 1) return make_h_form(n, parse_rational(head_parts[0]), areas);
  if (head_parts.size() == 2)
    return make_bf_form(n, parse_rational(head_parts[0]), parse_rational(head_parts[1]), areas);
  fail(Err::ParseError, "form literal head must be 'nu' or 'b,f': '" + text + "'");
}

}  // namespace ck
