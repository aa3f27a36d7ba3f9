#include "adk/cohomology.hpp"

#include <algorithm>

namespace adk {

HilbertProfile hilbert_profile(const FreeComplex& c, int max_degree) {
  HilbertProfile p;
  p.max_degree = max_degree;
  const int nv = c.sig.n_vars();
  Poly q = quadratic_form(c.sig);
  const Poly* quot = c.ring == RingTag::RModQ ? &q : nullptr;
  // cache slice ranks of d[i] per (i, t): used for both adjacent levels
  std::map<std::pair<int, int>, long long> rk;
  auto rank_of = [&](int i, int t) -> long long {
    if (i < 1 || i > c.length()) return 0;
    if (c.d[i].rows == 0 || c.d[i].cols == 0) return 0;
    auto key = std::make_pair(i, t);
    auto it = rk.find(key);
    if (it != rk.end()) return it->second;
    long long r = slice_rank(c.d[i], c.shifts[i - 1], c.shifts[i], t, quot);
    rk[key] = r;
    return r;
  };
  for (int i = 0; i <= c.length(); ++i)
    for (int t = 0; t <= max_degree; ++t) {
      long long n = 0;
      for (int s : c.shifts[i])
        n += quot ? quotient_dim(c.sig, t - s) : monomial_count(nv, t - s);
      long long dim = n - rank_of(i, t) - rank_of(i + 1, t);
      p.dims[{i, t}] = dim;
    }
  return p;
}

bool euler_consistent(const FreeComplex& c, const HilbertProfile& p) {
  const int nv = c.sig.n_vars();
  bool quot = c.ring == RingTag::RModQ;
  for (int t = 0; t <= p.max_degree; ++t) {
    long long lhs = 0, rhs = 0;
    for (int i = 0; i <= c.length(); ++i) {
      int sign = i % 2 ? -1 : 1;
      lhs += sign * p.at(i, t);
      long long n = 0;
      for (int s : c.shifts[i])
        n += quot ? quotient_dim(c.sig, t - s) : monomial_count(nv, t - s);
      rhs += sign * n;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool betti_consistency(const std::vector<long long>& hf, const BettiTable& claim, int nvars) {
  for (int t = 0; t < static_cast<int>(hf.size()); ++t) {
    long long want = 0;
    for (size_t k = 0; k < claim.b.size(); ++k) {
      int sign = k % 2 ? -1 : 1;
      want += sign * claim.b[k] *
              monomial_count(nvars, t - claim.base_degree - static_cast<int>(k));
    }
    if (hf[t] != want) return false;
  }
  return true;
}

long long hilb_formula(int n, int d) {
  if (n < 0 || d < 0) throw std::runtime_error("hilb_formula: n, d must be >= 0");
  return static_cast<long long>(n + 1 + d) * (d + 1);
}

long long hilb_series_coeff(int n, int d) {
  // ((n+1) - 2n t + (n-1) t^2) * sum_k C(k+3,3) t^k
  auto c3 = [](int k) -> long long {
    if (k < 0) return 0;
    return static_cast<long long>(k + 1) * (k + 2) * (k + 3) / 6;
  };
  return (n + 1) * c3(d) - 2LL * n * c3(d - 1) + (n - 1LL) * c3(d - 2);
}

namespace {

// M(n)_d has basis {(i, j) : 0 <= i <= n+d, 0 <= j <= d}; the four Segre
// variables x_{ab} (a, b in {0,1}) send (i, j) to (i+a, j+b) one degree up.
int basis_index(int n, int d, int i, int j) { return i * (d + 1) + j; }
long long basis_dim(int n, int d) {
  return d < 0 ? 0 : static_cast<long long>(n + 1 + d) * (d + 1);
}

}  // namespace

BettiTable betti_linear(int n) {
  if (n < 0) throw std::runtime_error("betti_linear: n must be >= 0");
  BettiTable bt;
  bt.base_degree = 0;
  const long long m0 = basis_dim(n, 0);  // n+1
  const long long m1 = basis_dim(n, 1);  // (n+2)*2
  // the four variables as maps M_0 -> M_1
  struct Var {
    int a, b;
  };
  const Var vars[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  // b1 = dim ker( V (x) M_0 -> M_1 ),  e_v (x) m |-> X_v m
  SparseMat ev(m1, 4 * m0);
  for (int v = 0; v < 4; ++v)
    for (int i = 0; i <= n; ++i)
      ev.add(basis_index(n, 1, i + vars[v].a, vars[v].b), v * static_cast<int>(m0) + i, 1);
  long long b1 = 4 * m0 - rank_exact(ev);
  // b2 = dim ker( Lambda^2 V (x) M_0 -> V (x) M_1 ),
  //      e_u ^ e_v (x) m |-> e_u (x) X_v m - e_v (x) X_u m
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs.emplace_back(u, v);
  SparseMat dl(4 * m1, static_cast<long long>(pairs.size()) * m0);
  for (size_t p = 0; p < pairs.size(); ++p) {
    auto [u, v] = pairs[p];
    for (int i = 0; i <= n; ++i) {
      int col = static_cast<int>(p) * static_cast<int>(m0) + i;
      dl.add(u * static_cast<int>(m1) + basis_index(n, 1, i + vars[v].a, vars[v].b), col, 1);
      dl.add(v * static_cast<int>(m1) + basis_index(n, 1, i + vars[u].a, vars[u].b), col, -1);
    }
  }
  long long b2 = static_cast<long long>(pairs.size()) * m0 - rank_exact(dl);
  bt.b = {m0, b1, b2};
  return bt;
}

}  // namespace adk
