#include "chamberkit/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "chamberkit/reduction.hpp"

namespace ck {

DynkinType::DynkinType(std::vector<DynkinComponent> comps) {
  // D2 = A1 x A1 and D3 = A3 as diagrams; D1 degenerates to A1.
  for (auto& c : comps) {
    if (c.family == 'D' && c.rank == 2) {
      components.push_back({'A', 1});
      c = {'A', 1};
    } else if (c.family == 'D' && c.rank <= 3) {
      c = {'A', c.rank};
    }
  }
  components.insert(components.end(), comps.begin(), comps.end());
  std::sort(components.begin(), components.end());
}

int DynkinType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  p <<= n;
  return p;
}

}  // namespace

Int DynkinType::weyl_order() const {
  Int order = 1;
  for (const auto& c : components) {
    switch (c.family) {
      case 'A': order *= factorial(c.rank + 1); break;
      case 'D': order *= pow2(c.rank - 1) * factorial(c.rank); break;
      case 'E':
        if (c.rank == 6) order *= 51840;
        else if (c.rank == 7) order *= 2903040;
        else if (c.rank == 8) order *= Int("696729600");
        else fail(Err::UnrecognizedDiagram, "E" + std::to_string(c.rank));
        break;
      default: fail(Err::UnrecognizedDiagram, std::string(1, c.family));
    }
  }
  return order;
}

Int DynkinType::positive_root_count() const {
  Int count = 0;
  for (const auto& c : components) {
    switch (c.family) {
      case 'A': count += Int(c.rank) * (c.rank + 1) / 2; break;
      case 'D': count += Int(c.rank) * (c.rank - 1); break;
      case 'E':
        if (c.rank == 6) count += 36;
        else if (c.rank == 7) count += 63;
        else if (c.rank == 8) count += 120;
        else fail(Err::UnrecognizedDiagram, "E" + std::to_string(c.rank));
        break;
      default: fail(Err::UnrecognizedDiagram, std::string(1, c.family));
    }
  }
  return count;
}

std::string DynkinType::to_string() const {
  if (components.empty()) return "trivial";
  std::string out;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) out += "x";
    out += components[i].family;
    out += std::to_string(components[i].rank);
  }
  return out;
}

DynkinType dynkin_a(int n) { return DynkinType({{'A', n}}); }
DynkinType dynkin_d(int n) { return DynkinType({{'D', n}}); }

DynkinType dynkin_product(const DynkinType& a, const DynkinType& b) {
  std::vector<DynkinComponent> comps = a.components;
  comps.insert(comps.end(), b.components.begin(), b.components.end());
  return DynkinType(comps);
}

Int weyl_order(const DynkinType& t) { return t.weyl_order(); }
Int positive_root_count(const DynkinType& t) { return t.positive_root_count(); }

DynkinType ambient_type(int k) {
  switch (k) {
    case 2: return dynkin_a(1);
    case 3: return dynkin_product(dynkin_a(1), dynkin_a(2));
    case 4: return dynkin_a(4);
    case 5: return dynkin_d(5);
    case 6: return DynkinType({{'E', 6}});
    case 7: return DynkinType({{'E', 7}});
    case 8: return DynkinType({{'E', 8}});
    default:
      if (k < 0 || k > 8) fail(Err::OutOfRange, "ambient type defined for k <= 8");
      return DynkinType();  // k = 0, 1: no roots
  }
}

// ---------------------------------------------------------------------------
// Enumeration.  A = dH - sum a_i E_i with
//   K.A = t  <=>  sum a_i = 3d + t,
//   A.A = s  <=>  sum a_i^2 = d^2 - s.
// d is rejected when the Cauchy-Schwarz minimum of sum a_i^2 already exceeds
// the target; the recursion prunes on the same bound.

namespace {

int env_threads() {
  const char* v = std::getenv("CHAMBERKIT_THREADS");
  if (!v) return 1;
  int t = std::atoi(v);
  return t < 1 ? 1 : t;
}

void enumerate_tail(int k, int pos, long long sum_left, long long sq_left,
                    std::vector<int>& acc, int d,
                    std::vector<HomologyClass>& out) {
  if (pos == k) {
    if (sum_left == 0 && sq_left == 0) {
      std::vector<Int> a(acc.begin(), acc.end());
      out.push_back(make_h_class(k, d, a));
    }
    return;
  }
  int m = k - pos;  // coordinates still free
  if (sq_left < 0) return;
  if (sum_left * sum_left > static_cast<long long>(m) * sq_left) return;
  long long amax = 0;
  while ((amax + 1) * (amax + 1) <= sq_left) ++amax;
  for (long long a = -amax; a <= amax; ++a) {
    acc[static_cast<size_t>(pos)] = static_cast<int>(a);
    enumerate_tail(k, pos + 1, sum_left - a, sq_left - a * a, acc, d, out);
  }
}

std::vector<HomologyClass> enumerate_classes(int k, int square, int k_pairing) {
  if (k < 1 || k > 8) fail(Err::OutOfRange, "enumeration defined for 1 <= k <= 8");
  // (3d + t)^2 <= k (d^2 - s) bounds d; scan a safe window and reject.
  struct Job {
    int d;
    long long sum, sq;
  };
  std::vector<Job> jobs;
  for (int d = -12; d <= 12; ++d) {
    long long sum = 3LL * d + k_pairing;
    long long sq = static_cast<long long>(d) * d - square;
    if (sq < 0) continue;
    if (sum * sum > static_cast<long long>(k) * sq) continue;
    jobs.push_back({d, sum, sq});
  }
  int threads = std::min<int>(env_threads(), static_cast<int>(jobs.size()));
  std::vector<HomologyClass> all;
  if (threads <= 1) {
    std::vector<int> acc(static_cast<size_t>(k), 0);
    for (const auto& j : jobs) enumerate_tail(k, 0, j.sum, j.sq, acc, j.d, all);
  } else {
    std::vector<std::vector<HomologyClass>> buckets(jobs.size());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        std::vector<int> acc(static_cast<size_t>(k), 0);
        for (size_t i = next++; i < jobs.size(); i = next++)
          enumerate_tail(k, 0, jobs[i].sum, jobs[i].sq, acc, jobs[i].d, buckets[i]);
      });
    for (auto& th : pool) th.join();
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

RootSet enumerate_roots(int k) {
  if (k < 1 || k > 8) fail(Err::OutOfRange, "roots enumerated for 1 <= k <= 8");
  return RootSet{k, enumerate_classes(k, -2, 0)};
}

ExceptionalSet enumerate_exceptional(int k) {
  if (k < 1 || k > 8) fail(Err::OutOfRange, "exceptional classes enumerated for 1 <= k <= 8");
  return ExceptionalSet{k, enumerate_classes(k, -1, -1)};
}

std::vector<HomologyClass> canonical_simple_roots(int k) {
  if (k < 2 || k > 8) fail(Err::OutOfRange, "simple roots defined for 2 <= k <= 8");
  std::vector<HomologyClass> roots;
  if (k >= 3) {
    std::vector<Int> a(static_cast<size_t>(k), 0);
    a[0] = a[1] = a[2] = 1;
    roots.push_back(make_h_class(k, 1, a));
  }
  for (int i = 1; i < k; ++i) {
    HomologyClass r = e_class(k, i) - e_class(k, i + 1);
    roots.push_back(r);
  }
  return roots;
}

FormClass reference_form(int k) {
  // (1 | 1/3 - delta, 1/3 - 2 delta, ...) with delta = 1/100 lies in the open
  // chamber for every k <= 8: strictly decreasing, c_k > 0, c1+c2+c3 < 1.
  std::vector<Rat> c(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) c[static_cast<size_t>(i - 1)] = Rat(1, 3) - Rat(i, 100);
  return make_h_form(k, 1, c);
}

std::vector<HomologyClass> positive_roots(int k) {
  auto all = enumerate_roots(k);
  FormClass ref = reference_form(k);
  std::vector<HomologyClass> pos;
  for (const auto& r : all.roots) {
    Rat a = area(ref, r);
    if (a == 0) fail(Err::OutOfRange, "reference form vanished on a root (not generic)");
    if (a > 0) pos.push_back(r);
  }
  return pos;
}

RootSplit positive_split(const FormClass& w) {
  if (w.basis.kind != BasisKind::H) fail(Err::WrongBasis, "positive_split expects the H basis");
  if (!is_reduced(w)) fail(Err::NotReduced, "positive_split expects a reduced form");
  int k = w.basis.blowups;
  if (k > 8) fail(Err::OutOfRange, "k <= 8");
  RootSplit split;
  for (const auto& r : positive_roots(k)) {
    Rat a = area(w, r);
    if (a < 0)
      fail(Err::NotReduced, "positive root with negative area against a reduced form");
    (a == 0 ? split.lagrangian : split.symplectic).push_back(r);
  }
  return split;
}

std::vector<HomologyClass> lagrangian_simple_roots(const FormClass& w) {
  if (w.basis.kind != BasisKind::H) fail(Err::WrongBasis, "expected the H basis");
  if (!is_reduced(w)) fail(Err::NotReduced, "expected a reduced form");
  int k = w.basis.blowups;
  std::vector<HomologyClass> zero;
  if (k < 2) return zero;
  for (const auto& r : canonical_simple_roots(k))
    if (area(w, r) == 0) zero.push_back(r);
  return zero;
}

DynkinType lagrangian_system(const FormClass& w) {
  DynkinType type = dynkin_classify(lagrangian_simple_roots(w));
  if (w.basis.blowups < 2) return type;
  // Cross-check against the split cardinality (Eq. SS = R+ \ R+(Gamma_L)).
  RootSplit split = positive_split(w);
  if (type.positive_root_count() != split.NL())
    throw std::logic_error("Lagrangian system does not close up to N_L positive roots");
  return type;
}

DynkinType dynkin_classify(const std::vector<HomologyClass>& simple_roots) {
  size_t n = simple_roots.size();
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < n; ++i) {
    if (pairing(simple_roots[i], simple_roots[i]) != -2)
      fail(Err::NotSimpleSystem, "diagonal pairing must be -2");
    for (size_t j = i + 1; j < n; ++j) {
      Int p = pairing(simple_roots[i], simple_roots[j]);
      if (p == 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      } else if (p != 0) {
        fail(Err::NotSimpleSystem, "off-diagonal pairing outside {0,1}");
      }
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<DynkinComponent> comps;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)}, verts;
    comp[s] = static_cast<int>(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int u : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(u)] == -1) {
          comp[static_cast<size_t>(u)] = static_cast<int>(s);
          stack.push_back(u);
        }
    }
    size_t edges = 0;
    std::vector<int> branch, leaves;
    for (int v : verts) {
      size_t deg = adj[static_cast<size_t>(v)].size();
      edges += deg;
      if (deg >= 4) fail(Err::UnrecognizedDiagram, "vertex of degree >= 4");
      if (deg == 3) branch.push_back(v);
      if (deg <= 1) leaves.push_back(v);
    }
    edges /= 2;
    if (edges != verts.size() - 1) fail(Err::UnrecognizedDiagram, "diagram contains a cycle");
    if (branch.empty()) {
      comps.push_back({'A', static_cast<int>(verts.size())});
      continue;
    }
    if (branch.size() > 1) fail(Err::UnrecognizedDiagram, "two branch vertices");
    // One degree-3 vertex: measure the three arm lengths.
    int b = branch[0];
    std::vector<int> arms;
    for (int start : adj[static_cast<size_t>(b)]) {
      int len = 1, prev = b, cur = start;
      while (true) {
        const auto& nb = adj[static_cast<size_t>(cur)];
        int next = -1;
        for (int u : nb)
          if (u != prev) next = u;
        if (next == -1) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    int total = static_cast<int>(verts.size());
    if (arms[0] == 1 && arms[1] == 1) {
      comps.push_back({'D', total});
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      comps.push_back({'E', total});
    } else {
      fail(Err::UnrecognizedDiagram, "branch arms not of type D or E");
    }
  }
  return DynkinType(comps);
}

}  // namespace ck
