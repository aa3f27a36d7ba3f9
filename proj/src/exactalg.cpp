#include "adk/exactalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace adk {

// ---------------------------------------------------------------------------
// VariableSet
// ---------------------------------------------------------------------------

VarKind VariableSet::kind(int v) const {
  if (v < 0 || v >= n_vars()) throw std::out_of_range("variable index");
  if (v < n_lambda) return VarKind::Lambda;
  if (v < n_lambda + n_mu) return VarKind::Mu;
  return ((v - n_lambda - n_mu) % 2 == 0) ? VarKind::Rho : VarKind::RhoStar;
}

int VariableSet::b_image(int v) const {
  switch (kind(v)) {
    case VarKind::Lambda:
    case VarKind::Mu:
      return v;
    case VarKind::Rho:
      return v + 1;
    case VarKind::RhoStar:
      return v - 1;
  }
  return v;
}

int VariableSet::b_sign(int v) const { return kind(v) == VarKind::Mu ? -1 : 1; }

int VariableSet::color_of_var(int v) const {
  if (v < n_lambda + n_mu) return v + 1;
  return n_lambda + n_mu + (v - n_lambda - n_mu) / 2 + 1;
}

bool VariableSet::color_is_waved(int color) const {
  return color > n_lambda + n_mu && color <= n_colors();
}

int VariableSet::var_of_color(int color) const {
  if (color < 1 || color > n_colors()) throw std::out_of_range("color index");
  if (color <= n_lambda + n_mu) return color - 1;
  return n_lambda + n_mu + 2 * (color - n_lambda - n_mu - 1);
}

std::string VariableSet::var_name(int v) const {
  switch (kind(v)) {
    case VarKind::Lambda:
      return "l" + std::to_string(v + 1);
    case VarKind::Mu:
      return "mu" + std::to_string(v - n_lambda + 1);
    case VarKind::Rho:
      return "rho" + std::to_string((v - n_lambda - n_mu) / 2 + 1);
    case VarKind::RhoStar:
      return "rhos" + std::to_string((v - n_lambda - n_mu) / 2 + 1);
  }
  return "?";
}

Rational VariableSet::q_of_basis_vector(int v) const {
  switch (kind(v)) {
    case VarKind::Lambda:
      return 1;
    case VarKind::Mu:
      return -1;
    default:
      return 0;
  }
}

Rational VariableSet::bilinear(int u, int v) const {
  // B(x,y) = q(x+y) - q(x) - q(y)
  if (u == v) return 2 * q_of_basis_vector(u);
  VarKind ku = kind(u), kv = kind(v);
  if ((ku == VarKind::Rho && kv == VarKind::RhoStar && b_image(u) == v) ||
      (ku == VarKind::RhoStar && kv == VarKind::Rho && b_image(v) == u))
    return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return r;
}

Poly Poly::constant(int nv, const Rational& c) {
  Poly p(nv);
  if (c != 0) p.terms[Monomial(nv, 0)] = c;
  return p;
}

Poly Poly::variable(int nv, int v) {
  Poly p(nv);
  Monomial m(nv, 0);
  m[v] = 1;
  p.terms[m] = 1;
  return p;
}

Poly Poly::monomial_term(int nv, const Monomial& m, const Rational& c) {
  Poly p(nv);
  if (c != 0) p.terms[m] = c;
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars);
  for (auto& [m, c] : terms) r.terms[m] = -c;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars);
  if (c == 0) return r;
  for (auto& [m, co] : terms) r.terms[m] = co * c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars);
  for (auto& [m1, c1] : terms)
    for (auto& [m2, c2] : o.terms) r.add_term(monomial_mul(m1, m2), c1 * c2);
  return r;
}

int Poly::homogeneous_degree() const {
  if (terms.empty()) return -1;
  int d = monomial_degree(terms.begin()->first);
  for (auto& [m, c] : terms)
    if (monomial_degree(m) != d) throw std::runtime_error("polynomial is not homogeneous");
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms.empty()) return true;
  int d = monomial_degree(terms.begin()->first);
  for (auto& [m, c] : terms)
    if (monomial_degree(m) != d) return false;
  return true;
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : terms) d = std::max(d, monomial_degree(m));
  return d;
}

std::string Poly::to_string(const VariableSet& sig) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    Rational a = c;
    if (sgn(a) < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool unit = (a == 1);
    bool any_var = monomial_degree(m) > 0;
    if (!unit || !any_var) os << a.get_str();
    bool star = !unit || !any_var;
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (star) os << "*";
      os << sig.var_name(static_cast<int>(v));
      if (m[v] > 1) os << "^" << static_cast<int>(m[v]);
      star = true;
    }
  }
  return os.str();
}

Poly involution_b(const VariableSet& sig, const Poly& p) {
  Poly r(p.nvars);
  for (auto& [m, c] : p.terms) {
    Monomial im(p.nvars, 0);
    int sign = 1;
    for (int v = 0; v < p.nvars; ++v) {
      if (m[v] == 0) continue;
      im[sig.b_image(v)] = static_cast<std::uint8_t>(im[sig.b_image(v)] + m[v]);
      if (sig.b_sign(v) < 0 && m[v] % 2 == 1) sign = -sign;
    }
    r.add_term(im, sign > 0 ? c : -c);
  }
  return r;
}

Poly quadratic_form(const VariableSet& sig) {
  int nv = sig.n_vars();
  Poly q(nv);
  for (int i = 0; i < sig.n_lambda; ++i) {
    Monomial m(nv, 0);
    m[i] = 2;
    q.add_term(m, 1);
  }
  for (int j = 0; j < sig.n_mu; ++j) {
    Monomial m(nv, 0);
    m[sig.n_lambda + j] = 2;
    q.add_term(m, -1);
  }
  for (int k = 0; k < sig.n_rho; ++k) {
    Monomial m(nv, 0);
    m[sig.n_lambda + sig.n_mu + 2 * k] = 1;
    m[sig.n_lambda + sig.n_mu + 2 * k + 1] = 1;
    q.add_term(m, 1);
  }
  return q;
}

std::optional<Rational> multiple_of(const Poly& p, const Poly& m) {
  if (p.is_zero()) return Rational(0);
  if (m.is_zero()) return std::nullopt;
  const auto& [lm, lc] = *m.terms.begin();
  auto it = p.terms.find(lm);
  if (it == p.terms.end()) return std::nullopt;
  Rational ratio = it->second / lc;
  if (p == m.scaled(ratio)) return ratio;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PolyMatrix
// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(int r, int c, int nv)
    : rows(r), cols(c), nvars(nv), e(static_cast<size_t>(r) * c, Poly(nv)) {}

PolyMatrix PolyMatrix::identity(int n, int nv) {
  PolyMatrix m(n, n, nv);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(nv, 1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols != o.rows) throw std::runtime_error("matrix product shape mismatch");
  PolyMatrix r(rows, o.cols, nvars);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Poly& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::runtime_error("matrix sum shape mismatch");
  PolyMatrix r(rows, cols, nvars);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::runtime_error("matrix diff shape mismatch");
  PolyMatrix r(rows, cols, nvars);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(rows, cols, nvars);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols, rows, nvars);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& p) const {
  PolyMatrix r(rows, cols, nvars);
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] * p;
  return r;
}

bool PolyMatrix::is_zero() const {
  for (auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows == o.rows && cols == o.cols && e == o.e;
}

PolyMatrix PolyMatrix::b_transpose(const VariableSet& sig) const {
  PolyMatrix r(cols, rows, nvars);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = involution_b(sig, at(i, j));
  return r;
}

bool PolyMatrix::is_scalar(const Poly& p) const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j ? (at(i, j) != p) : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool PolyMatrix::is_zero_mod(const Poly& q) const {
  for (auto& p : e)
    if (!multiple_of(p, q)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monomial bases
// ---------------------------------------------------------------------------

long long monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // C(d + nvars - 1, nvars - 1)
  long long r = 1;
  for (int i = 1; i <= nvars - 1; ++i) r = r * (d + i) / i;
  return r;
}

namespace {

void gen_monomials(int nvars, int d, int pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = static_cast<std::uint8_t>(d);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = static_cast<std::uint8_t>(e);
    gen_monomials(nvars, d - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

struct BasisCache {
  std::map<std::pair<int, int>, std::vector<Monomial>> bases;
  std::map<std::pair<int, int>, std::unordered_map<std::string, int>> index;
  std::mutex mu;
};

BasisCache& cache() {
  static BasisCache c;
  return c;
}

std::string mono_key(const Monomial& m) {
  return std::string(reinterpret_cast<const char*>(m.data()), m.size());
}

}  // namespace

const std::vector<Monomial>& monomial_basis(int nvars, int d) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto key = std::make_pair(nvars, d);
  auto it = c.bases.find(key);
  if (it != c.bases.end()) return it->second;
  std::vector<Monomial> out;
  if (d >= 0 && nvars > 0) {
    Monomial cur(nvars, 0);
    gen_monomials(nvars, d, 0, cur, out);
  } else if (d == 0 && nvars == 0) {
    out.push_back(Monomial{});
  }
  auto& stored = c.bases[key] = std::move(out);
  auto& idx = c.index[key];
  for (size_t i = 0; i < stored.size(); ++i) idx[mono_key(stored[i])] = static_cast<int>(i);
  return stored;
}

int monomial_index(int nvars, const Monomial& m) {
  int d = monomial_degree(m);
  monomial_basis(nvars, d);  // ensure cached
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& idx = c.index[{nvars, d}];
  auto it = idx.find(mono_key(m));
  if (it == idx.end()) throw std::runtime_error("monomial not in basis");
  return it->second;
}

long long quotient_dim(const VariableSet& sig, int d) {
  return monomial_count(sig.n_vars(), d) - monomial_count(sig.n_vars(), d - 2);
}

// ---------------------------------------------------------------------------
// Sparse exact rank
// ---------------------------------------------------------------------------

long long rank_exact(const SparseMat& m) {
  const long long R = m.rows, C = m.cols;
  if (R == 0 || C == 0) return 0;
  // Row-major working copy with per-column active-row sets; Markowitz-style
  // pivoting (pick the sparsest active row, then its sparsest column).
  std::vector<std::map<int, Rational>> row(static_cast<size_t>(R));
  for (int c = 0; c < C; ++c)
    for (auto& [r, v] : m.col_entries[c])
      if (v != 0) {
        auto [it, fresh] = row[r].emplace(c, v);
        if (!fresh) {
          it->second += v;
          if (it->second == 0) row[r].erase(it);
        }
      }
  std::vector<int> col_count(static_cast<size_t>(C), 0);
  for (long long r = 0; r < R; ++r)
    for (auto& [c, v] : row[r]) col_count[c]++;
  std::vector<std::set<int>> col_rows(static_cast<size_t>(C));
  for (long long r = 0; r < R; ++r)
    for (auto& [c, v] : row[r]) col_rows[c].insert(static_cast<int>(r));
  std::vector<bool> row_done(static_cast<size_t>(R), false);

  // Active rows ordered by sparsity (approximate; refreshed lazily).
  long long rank = 0;
  while (true) {
    // pick the active row with the fewest entries
    long long best_r = -1;
    size_t best_n = SIZE_MAX;
    for (long long r = 0; r < R; ++r) {
      if (row_done[r] || row[r].empty()) continue;
      if (row[r].size() < best_n) {
        best_n = row[r].size();
        best_r = r;
        if (best_n == 1) break;
      }
    }
    if (best_r < 0) break;
    // within that row, pick the column with the fewest active rows
    int best_c = -1;
    int best_cc = INT32_MAX;
    for (auto& [c, v] : row[best_r]) {
      int cc = static_cast<int>(col_rows[c].size());
      if (cc < best_cc) {
        best_cc = cc;
        best_c = c;
      }
    }
    // eliminate best_c from all other active rows
    Rational piv = row[best_r][best_c];
    std::vector<int> targets(col_rows[best_c].begin(), col_rows[best_c].end());
    for (int r : targets) {
      if (r == best_r || row_done[r]) continue;
      auto it = row[r].find(best_c);
      if (it == row[r].end()) continue;
      Rational factor = it->second / piv;
      for (auto& [c, v] : row[best_r]) {
        auto [jt, fresh] = row[r].emplace(c, 0);
        jt->second -= factor * v;
        if (jt->second == 0) {
          row[r].erase(jt);
          col_rows[c].erase(r);
        } else if (fresh) {
          col_rows[c].insert(r);
        }
      }
    }
    // retire the pivot row and column
    row_done[best_r] = true;
    for (auto& [c, v] : row[best_r]) col_rows[c].erase(static_cast<int>(best_r));
    rank++;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Graded slices
// ---------------------------------------------------------------------------

namespace {

// offsets of each generator's monomial block within the slice basis
std::vector<long long> block_offsets(const std::vector<int>& shifts, int d, int nvars,
                                     long long* total) {
  std::vector<long long> off(shifts.size());
  long long t = 0;
  for (size_t i = 0; i < shifts.size(); ++i) {
    off[i] = t;
    t += monomial_count(nvars, d - shifts[i]);
  }
  *total = t;
  return off;
}

}  // namespace

SparseMat graded_component(const PolyMatrix& m, const std::vector<int>& row_shifts,
                           const std::vector<int>& col_shifts, int d) {
  if (static_cast<size_t>(m.rows) != row_shifts.size() ||
      static_cast<size_t>(m.cols) != col_shifts.size())
    throw std::runtime_error("graded_component: shift count mismatch");
  const int nv = m.nvars;
  long long nrows = 0, ncols = 0;
  auto roff = block_offsets(row_shifts, d, nv, &nrows);
  auto coff = block_offsets(col_shifts, d, nv, &ncols);
  SparseMat out(nrows, ncols);
  for (int j = 0; j < m.cols; ++j) {
    const auto& cbasis = monomial_basis(nv, d - col_shifts[j]);
    for (int i = 0; i < m.rows; ++i) {
      const Poly& p = m.at(i, j);
      if (p.is_zero()) continue;
      int want = col_shifts[j] - row_shifts[i];
      for (auto& [mono, coeff] : p.terms) {
        if (monomial_degree(mono) != want)
          throw std::runtime_error("graded_component: entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") is not homogeneous of degree " +
                                   std::to_string(want));
      }
      for (size_t k = 0; k < cbasis.size(); ++k) {
        for (auto& [mono, coeff] : p.terms) {
          Monomial target = monomial_mul(cbasis[k], mono);
          int ri = monomial_index(nv, target);
          out.add(static_cast<int>(roff[i] + ri), static_cast<int>(coff[j] + k), coeff);
        }
      }
    }
  }
  return out;
}

SparseMat q_multiple_columns(const std::vector<int>& shifts, int d, const Poly& q) {
  const int nv = q.nvars;
  long long nrows = 0;
  auto roff = block_offsets(shifts, d, nv, &nrows);
  long long ncols = 0;
  for (int s : shifts) ncols += monomial_count(nv, d - s - 2);
  SparseMat out(nrows, ncols);
  long long cj = 0;
  for (size_t i = 0; i < shifts.size(); ++i) {
    const auto& basis = monomial_basis(nv, d - shifts[i] - 2);
    for (auto& b : basis) {
      for (auto& [mono, coeff] : q.terms) {
        Monomial target = monomial_mul(b, mono);
        out.add(static_cast<int>(roff[i] + monomial_index(nv, target)), static_cast<int>(cj),
                coeff);
      }
      cj++;
    }
  }
  return out;
}

SparseMat hconcat(const SparseMat& a, const SparseMat& b) {
  if (a.rows != b.rows) throw std::runtime_error("hconcat: row mismatch");
  SparseMat out(a.rows, a.cols + b.cols);
  for (long long c = 0; c < a.cols; ++c) out.col_entries[c] = a.col_entries[c];
  for (long long c = 0; c < b.cols; ++c) out.col_entries[a.cols + c] = b.col_entries[c];
  return out;
}

long long slice_rank(const PolyMatrix& m, const std::vector<int>& row_shifts,
                     const std::vector<int>& col_shifts, int d, const Poly* quotient_q) {
  SparseMat a = graded_component(m, row_shifts, col_shifts, d);
  if (!quotient_q) return rank_exact(a);
  SparseMat w = q_multiple_columns(row_shifts, d, *quotient_q);
  long long rw = rank_exact(w);
  return rank_exact(hconcat(a, w)) - rw;
}

}  // namespace adk
