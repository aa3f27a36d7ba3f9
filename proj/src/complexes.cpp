#include "adk/complexes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adk {

bool FreeComplex::differential_squares_to_zero() const {
  Poly q = quadratic_form(sig);
  for (int i = 1; i + 1 <= length(); ++i) {
    if (d[i].rows == 0 || d[i + 1].cols == 0 || d[i].cols == 0) continue;
    PolyMatrix p = d[i] * d[i + 1];
    if (ring == RingTag::R ? !p.is_zero() : !p.is_zero_mod(q)) return false;
  }
  return true;
}

FreeComplex complex_of(const Adinkra& a) {
  FreeComplex c;
  c.sig = a.sig;
  const int nv = a.sig.n_vars();
  auto lv = a.levels();
  int hmin = a.min_height(), hmax = a.max_height();
  std::map<std::string, std::pair<int, int>> pos;  // id -> (level, index)
  for (int h = hmin; h <= hmax; ++h) {
    std::vector<std::string> ids = lv.count(h) ? lv[h] : std::vector<std::string>{};
    std::vector<int> sh(ids.size(), h);
    for (size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = {h - hmin, static_cast<int>(k)};
    c.labels.push_back(ids);
    c.shifts.push_back(sh);
  }
  c.d.resize(c.labels.size());
  for (size_t i = 0; i < c.labels.size(); ++i)
    c.d[i] = PolyMatrix(i == 0 ? 0 : static_cast<int>(c.labels[i - 1].size()),
                        i == 0 ? 0 : static_cast<int>(c.labels[i].size()), nv);
  for (auto& e : a.edges) {
    const Vertex& vu = a.vertex(e.u);
    const Vertex& vv = a.vertex(e.v);
    const std::string& src = vu.height > vv.height ? e.u : e.v;  // higher endpoint
    const std::string& tgt = vu.height > vv.height ? e.v : e.u;
    auto [lsrc, isrc] = pos[src];
    auto [ltgt, itgt] = pos[tgt];
    // edge variable: lambda/mu colors carry their variable; a waved color k
    // carries rho_k when the down-traversal agrees with the arrow and
    // rho_k^* when it opposes it
    int var = a.sig.var_of_color(e.color);
    if (a.sig.color_is_waved(e.color) && e.arrow == 1) var += 1;  // arrow up -> rho^*
    Poly term = Poly::variable(nv, var).scaled(e.dash);
    c.d[lsrc].at(itgt, isrc) = c.d[lsrc].at(itgt, isrc) + term;
  }
  return c;
}

std::vector<PolyMatrix> adjoint_of(const FreeComplex& c) {
  std::vector<PolyMatrix> adj;
  for (int i = 0; i < c.length(); ++i) adj.push_back(c.d[i + 1].b_transpose(c.sig));
  return adj;
}

LaplacianReport check_laplacian(const FreeComplex& c) {
  LaplacianReport rep;
  Poly q = quadratic_form(c.sig);
  auto adj = adjoint_of(c);
  for (int i = 0; i <= c.length(); ++i) {
    int n = static_cast<int>(c.labels[i].size());
    if (n == 0) continue;
    PolyMatrix lap(n, n, c.sig.n_vars());
    if (i >= 1) lap = lap + adj[i - 1] * c.d[i];
    if (i < c.length()) lap = lap + c.d[i + 1] * adj[i];
    if (!lap.is_scalar(q)) {
      rep.ok = false;
      for (int r = 0; r < n && rep.detail.empty(); ++r)
        for (int s = 0; s < n; ++s) {
          const Poly& want = (r == s) ? q : Poly::zero(c.sig.n_vars());
          if (lap.at(r, s) != want) {
            rep.detail = "level " + std::to_string(i) + " entry (" + std::to_string(r) + "," +
                         std::to_string(s) + ") = " + lap.at(r, s).to_string(c.sig);
            break;
          }
        }
      return rep;
    }
  }
  return rep;
}

bool MatrixFactorization::verify() const {
  Poly q = quadratic_form(sig);
  if (psi.rows != psi.cols || phi.rows != phi.cols || psi.rows != phi.rows) return false;
  return (psi * phi).is_scalar(q) && (phi * psi).is_scalar(q);
}

MatrixFactorization valise_mf(const Adinkra& a) {
  FreeComplex c = complex_of(a);
  if (c.length() != 1) {
    std::ostringstream os;
    os << "valise_mf: heights span " << a.min_height() << ".." << a.max_height()
       << "; a valise occupies exactly two adjacent levels";
    throw std::runtime_error(os.str());
  }
  MatrixFactorization mf;
  mf.sig = a.sig;
  mf.psi = c.d[1];
  mf.phi = c.d[1].b_transpose(a.sig);
  if (!mf.verify()) throw std::runtime_error("valise_mf: (d, d^+) is not a matrix factorization");
  return mf;
}

namespace {

// Remap a polynomial over `from` into the combined signature, as the first
// (second = false) or second (second = true) tensor factor.
Poly remap_poly(const Poly& p, const VariableSet& from, const VariableSet& first,
                const VariableSet& combined, bool second) {
  auto map_var = [&](int v) {
    switch (from.kind(v)) {
      case VarKind::Lambda:
        return v + (second ? first.n_lambda : 0);
      case VarKind::Mu:
        return combined.n_lambda + (v - from.n_lambda) + (second ? first.n_mu : 0);
      default: {
        int off = v - from.n_lambda - from.n_mu;
        return combined.n_lambda + combined.n_mu + off + (second ? 2 * first.n_rho : 0);
      }
    }
  };
  Poly r(combined.n_vars());
  for (auto& [m, c] : p.terms) {
    Monomial im(combined.n_vars(), 0);
    for (int v = 0; v < p.nvars; ++v)
      if (m[v]) im[map_var(v)] = static_cast<std::uint8_t>(im[map_var(v)] + m[v]);
    r.add_term(im, c);
  }
  return r;
}

PolyMatrix remap_matrix(const PolyMatrix& m, const VariableSet& from, const VariableSet& first,
                        const VariableSet& combined, bool second) {
  PolyMatrix r(m.rows, m.cols, combined.n_vars());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = remap_poly(m.at(i, j), from, first, combined, second);
  return r;
}

// Kronecker product of polynomial matrices.
PolyMatrix kron(const PolyMatrix& x, const PolyMatrix& y) {
  PolyMatrix r(x.rows * y.rows, x.cols * y.cols, x.nvars);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l) {
          if (y.at(k, l).is_zero()) continue;
          r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
        }
    }
  return r;
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                    const PolyMatrix& d) {
  PolyMatrix r(a.rows + c.rows, a.cols + b.cols, a.nvars);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) r.at(a.rows + i, j) = c.at(i, j);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j) r.at(a.rows + i, a.cols + j) = d.at(i, j);
  return r;
}

}  // namespace

MatrixFactorization knorrer(const MatrixFactorization& a, const MatrixFactorization& b) {
  if (a.sig.n_vars() == 0 || b.sig.n_vars() == 0)
    throw std::runtime_error("knorrer: both factors need at least one variable");
  VariableSet comb{a.sig.n_lambda + b.sig.n_lambda, a.sig.n_mu + b.sig.n_mu,
                   a.sig.n_rho + b.sig.n_rho};
  int nv = comb.n_vars();
  PolyMatrix psiA = remap_matrix(a.psi, a.sig, a.sig, comb, false);
  PolyMatrix psiB = remap_matrix(b.psi, b.sig, a.sig, comb, true);
  PolyMatrix idA = PolyMatrix::identity(a.rank(), nv);
  PolyMatrix idB = PolyMatrix::identity(b.rank(), nv);
  // tau = [[ I (x) psi_B,  psi_A (x) I ],
  //        [ psi_A^+ (x) I,  -I (x) psi_B^+ ]]
  PolyMatrix tau = block2x2(kron(idA, psiB), kron(psiA, idB),
                            kron(psiA.b_transpose(comb), idB),
                            -kron(idA, psiB.b_transpose(comb)));
  MatrixFactorization mf;
  mf.sig = comb;
  mf.psi = tau;
  mf.phi = tau.b_transpose(comb);
  if (!mf.verify())
    throw std::runtime_error("knorrer: tensor product is not a matrix factorization");
  return mf;
}

namespace {

// Component f[i] of a chain map as a matrix with the correct shape (zero if
// absent or empty).
PolyMatrix component(const ChainMap& m, int i) {
  int tlev = i - m.shift;
  int rows = (tlev >= 0 && tlev <= m.target.length())
                 ? static_cast<int>(m.target.labels[tlev].size())
                 : 0;
  int cols =
      (i >= 0 && i <= m.source.length()) ? static_cast<int>(m.source.labels[i].size()) : 0;
  if (i >= 0 && i < static_cast<int>(m.f.size()) && m.f[i].rows == rows && m.f[i].cols == cols)
    return m.f[i];
  return PolyMatrix(rows, cols, m.source.sig.n_vars());
}

PolyMatrix diff_or_zero(const FreeComplex& c, int i) {
  if (i >= 1 && i <= c.length()) return c.d[i];
  int rows = (i - 1 >= 0 && i - 1 <= c.length()) ? static_cast<int>(c.labels[i - 1].size()) : 0;
  int cols = (i >= 0 && i <= c.length()) ? static_cast<int>(c.labels[i].size()) : 0;
  return PolyMatrix(rows, cols, c.sig.n_vars());
}

}  // namespace

bool verify_chain_map(const ChainMap& m) {
  if (!(m.source.sig == m.target.sig)) return false;
  Poly q = quadratic_form(m.source.sig);
  bool mod_q = m.source.ring == RingTag::RModQ || m.target.ring == RingTag::RModQ;
  for (int i = 1; i <= m.source.length(); ++i) {
    PolyMatrix lhs = component(m, i - 1) * diff_or_zero(m.source, i);
    PolyMatrix rhs = diff_or_zero(m.target, i - m.shift) * component(m, i);
    if (lhs.rows == 0 || lhs.cols == 0) {
      if (!(rhs.rows == lhs.rows && rhs.cols == lhs.cols)) return false;
      continue;
    }
    PolyMatrix diff = lhs - rhs;
    if (mod_q ? !diff.is_zero_mod(q) : !diff.is_zero()) return false;
  }
  return true;
}

FreeComplex cone(const ChainMap& m) {
  if (m.shift != 1) throw std::runtime_error("cone: expected a degree-1 chain map");
  if (!verify_chain_map(m)) throw std::runtime_error("cone: the given map is not a chain map");
  FreeComplex c;
  c.sig = m.source.sig;
  c.ring = m.source.ring;
  int len = std::max(m.target.length(), m.source.length());
  const int nv = c.sig.n_vars();
  for (int k = 0; k <= len; ++k) {
    std::vector<std::string> lab;
    std::vector<int> sh;
    if (k <= m.target.length()) {
      lab = m.target.labels[k];
      sh = m.target.shifts[k];
    }
    if (k <= m.source.length())
      for (size_t j = 0; j < m.source.labels[k].size(); ++j) {
        lab.push_back(m.source.labels[k][j] + "'");
        sh.push_back(m.source.shifts[k][j]);
      }
    c.labels.push_back(lab);
    c.shifts.push_back(sh);
  }
  c.d.resize(len + 1);
  c.d[0] = PolyMatrix(0, 0, nv);
  for (int k = 1; k <= len; ++k) {
    PolyMatrix dt = diff_or_zero(m.target, k);
    PolyMatrix ds = diff_or_zero(m.source, k);
    PolyMatrix fk = component(m, k);  // S^{-k} -> T^{-k+1}
    c.d[k] = block2x2(dt, fk, PolyMatrix(ds.rows, dt.cols, nv), -ds);
  }
  return c;
}

FreeComplex cone_of_raise(const Adinkra& a, const std::string& vid) {
  auto raisable = raisable_vertices(a);
  if (std::find(raisable.begin(), raisable.end(), vid) == raisable.end())
    throw std::runtime_error("cone_of_raise: vertex " + vid + " is not raisable (d v != 0)");
  FreeComplex c = complex_of(a);
  auto adj = adjoint_of(c);
  const Vertex& v = a.vertex(vid);
  int hmin = a.min_height();
  int iv = v.height - hmin;  // homological level of v
  int vcol = -1;
  for (size_t k = 0; k < c.labels[iv].size(); ++k)
    if (c.labels[iv][k] == vid) vcol = static_cast<int>(k);
  const int nv = c.sig.n_vars();

  // S = ( R[h+2] --q--> R[h] ) in homological levels iv+2, iv+1
  FreeComplex s;
  s.sig = c.sig;
  for (int k = 0; k <= iv + 2; ++k) {
    s.labels.emplace_back();
    s.shifts.emplace_back();
  }
  s.labels[iv + 1] = {"u"};
  s.shifts[iv + 1] = {v.height};
  s.labels[iv + 2] = {"w"};
  s.shifts[iv + 2] = {v.height + 2};
  s.d.resize(iv + 3, PolyMatrix(0, 0, nv));
  for (int k = 1; k <= iv + 2; ++k)
    s.d[k] = PolyMatrix(static_cast<int>(s.labels[k - 1].size()),
                        static_cast<int>(s.labels[k].size()), nv);
  s.d[iv + 2].at(0, 0) = quadratic_form(c.sig);

  ChainMap j;
  j.source = s;
  j.target = c;
  j.shift = 1;
  j.f.resize(iv + 3, PolyMatrix(0, 0, nv));
  // 1 |-> v
  PolyMatrix upper(static_cast<int>(c.labels[iv].size()), 1, nv);
  upper.at(vcol, 0) = Poly::constant(nv, 1);
  j.f[iv + 1] = upper;
  // 1 |-> d^+ v
  if (iv > static_cast<int>(adj.size()) - 1)
    throw std::runtime_error("cone_of_raise: adjoint unavailable at the top level");
  PolyMatrix lower(static_cast<int>(c.labels[iv + 1].size()), 1, nv);
  for (int r = 0; r < lower.rows; ++r) lower.at(r, 0) = adj[iv].at(r, vcol);
  j.f[iv + 2] = lower;
  return cone(j);
}

UnrollResult unroll(const FreeComplex& c, int truncation_level) {
  const int m = c.length();
  const int nv = c.sig.n_vars();
  int L = truncation_level >= 0 ? truncation_level : m + 4;
  auto adj = adjoint_of(c);
  Poly q = quadratic_form(c.sig);

  // level l of the unrolled complex: blocks (i, j) with i = l - 2j in [0, m]
  auto blocks = [&](int l) {
    std::vector<std::pair<int, int>> out;  // (original level i, copy j)
    for (int j = 0; 2 * j <= l; ++j) {
      int i = l - 2 * j;
      if (i <= m) out.emplace_back(i, j);
    }
    return out;
  };
  UnrollResult res;
  res.truncation = L;
  FreeComplex& u = res.unrolled;
  u.sig = c.sig;
  u.ring = RingTag::RModQ;
  for (int l = 0; l <= L; ++l) {
    std::vector<std::string> lab;
    std::vector<int> sh;
    for (auto [i, j] : blocks(l))
      for (size_t k = 0; k < c.labels[i].size(); ++k) {
        lab.push_back(c.labels[i][k] + "(" + std::to_string(j) + ")");
        sh.push_back(c.shifts[i][k] + 2 * j);
      }
    u.labels.push_back(lab);
    u.shifts.push_back(sh);
  }
  u.d.resize(L + 1, PolyMatrix(0, 0, nv));
  for (int l = 1; l <= L; ++l) {
    auto src = blocks(l);
    auto tgt = blocks(l - 1);
    std::vector<int> tgt_off(tgt.size());
    int rows = 0;
    for (size_t t = 0; t < tgt.size(); ++t) {
      tgt_off[t] = rows;
      rows += static_cast<int>(c.labels[tgt[t].first].size());
    }
    std::vector<int> src_off(src.size());
    int cols = 0;
    for (size_t t = 0; t < src.size(); ++t) {
      src_off[t] = cols;
      cols += static_cast<int>(c.labels[src[t].first].size());
    }
    PolyMatrix dm(rows, cols, nv);
    auto place = [&](int toff, int soff, const PolyMatrix& blk) {
      for (int r = 0; r < blk.rows; ++r)
        for (int cc = 0; cc < blk.cols; ++cc)
          dm.at(toff + r, soff + cc) = dm.at(toff + r, soff + cc) + blk.at(r, cc);
    };
    for (size_t sidx = 0; sidx < src.size(); ++sidx) {
      auto [i, j] = src[sidx];
      // d part: (i, j) -> (i-1, j)
      if (i >= 1) {
        for (size_t t = 0; t < tgt.size(); ++t)
          if (tgt[t].first == i - 1 && tgt[t].second == j)
            place(tgt_off[t], src_off[sidx], c.d[i]);
      }
      // d^+ part: (i, j) -> (i+1, j-1)
      if (j >= 1 && i + 1 <= m) {
        for (size_t t = 0; t < tgt.size(); ++t)
          if (tgt[t].first == i + 1 && tgt[t].second == j - 1)
            place(tgt_off[t], src_off[sidx], adj[i]);
      }
    }
    u.d[l] = std::move(dm);
  }
  res.d_squared_zero_mod_q = true;
  for (int l = 2; l <= L; ++l) {
    PolyMatrix p = u.d[l - 1] * u.d[l];
    if (!p.is_zero_mod(q)) {
      res.d_squared_zero_mod_q = false;
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Koszul embedding: level-by-level exact linear solves
// ---------------------------------------------------------------------------

namespace {

// Dense exact linear algebra helper: solve A x = b, returning a particular
// solution and a nullspace basis.  Throws if inconsistent.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
};

AffineSolution solve_affine(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  std::vector<bool> is_pivot(cols, false);
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t cc = c; cc < cols; ++cc) a[r][cc] *= inv;
    b[r] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || a[rr][c] == 0) continue;
      Rational f = a[rr][c];
      for (size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
      b[rr] -= f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot[c] = true;
    ++r;
  }
  for (size_t rr = r; rr < rows; ++rr)
    if (b[rr] != 0) throw std::runtime_error("linear system is inconsistent");
  AffineSolution sol;
  sol.particular.assign(cols, 0);
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    sol.particular[pivot_col_of_row[i]] = b[i];
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -a[i][c];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

long long dense_rank(const std::vector<std::vector<Rational>>& m) {
  SparseMat s(static_cast<long long>(m.size()), m.empty() ? 0 : static_cast<long long>(m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0) s.add(static_cast<int>(i), static_cast<int>(j), m[i][j]);
  return rank_exact(s);
}

// Coefficient of variable v in a linear-form matrix, as a rational matrix.
std::vector<std::vector<Rational>> var_coefficient(const PolyMatrix& m, int v) {
  std::vector<std::vector<Rational>> out(m.rows, std::vector<Rational>(m.cols, 0));
  Monomial mono(m.nvars, 0);
  mono[v] = 1;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      auto it = m.at(i, j).terms.find(mono);
      if (it != m.at(i, j).terms.end()) out[i][j] = it->second;
    }
  return out;
}

}  // namespace

ChainMap embed_into_koszul(const Adinkra& a) {
  if (a.sig.n_mu > 0 || a.sig.n_rho > 0)
    throw std::runtime_error("embed_into_koszul requires a lambda-only signature");
  long long zm = zero_modes(a);
  if (zm != 1)
    throw std::runtime_error("embed_into_koszul: hypothesis fails, " + std::to_string(zm) +
                             " zero modes (need a unique minimal-height vertex)");
  auto lv = a.levels();
  if (lv.begin()->second.size() != 1)
    throw std::runtime_error("embed_into_koszul: minimal height is not a single vertex");
  // normalize heights so the minimum is 0 (the Koszul complex starts there)
  Adinkra an = a;
  int hmin = a.min_height();
  for (auto& v : an.vertices) v.height -= hmin;
  const int n = a.sig.n_colors();
  FreeComplex src = complex_of(an);
  FreeComplex tgt = complex_of(koszul_adinkra(n));
  const int nv = src.sig.n_vars();
  ChainMap cm;
  cm.source = src;
  cm.target = tgt;
  cm.shift = 0;
  cm.f.resize(src.length() + 1, PolyMatrix(0, 0, nv));
  // f[0] = [1]
  PolyMatrix f0(1, 1, nv);
  f0.at(0, 0) = Poly::constant(nv, 1);
  cm.f[0] = f0;

  unsigned long long lcg = 0x9e3779b97f4a7c15ull;  // deterministic retry seed
  auto next_small = [&]() {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((lcg >> 33) % 5) - 2;  // in [-2, 2]
  };

  for (int i = 1; i <= src.length(); ++i) {
    const int rk = static_cast<int>(tgt.labels[i].size());   // rank of Koszul level
    const int na = static_cast<int>(src.labels[i].size());   // rank of source level
    // Solve d_K[i] * X = f[i-1] * d_A[i] for a constant rK x nA matrix X by
    // matching the coefficient of each variable.
    PolyMatrix rhs = cm.f[i - 1] * src.d[i];
    const int krows = tgt.d[i].rows;
    std::vector<std::vector<Rational>> sys;
    std::vector<Rational> b;
    for (int v = 0; v < nv; ++v) {
      auto kv = var_coefficient(tgt.d[i], v);
      auto bv = var_coefficient(rhs, v);
      for (int r = 0; r < krows; ++r)
        for (int c = 0; c < na; ++c) {
          std::vector<Rational> row(static_cast<size_t>(rk) * na, 0);
          for (int s = 0; s < rk; ++s)
            if (kv[r][s] != 0) row[static_cast<size_t>(s) * na + c] = kv[r][s];
          sys.push_back(std::move(row));
          b.push_back(bv[r][c]);
        }
    }
    AffineSolution sol = solve_affine(std::move(sys), std::move(b));
    auto build = [&](const std::vector<Rational>& vecx) {
      std::vector<std::vector<Rational>> x(rk, std::vector<Rational>(na, 0));
      for (int s = 0; s < rk; ++s)
        for (int c = 0; c < na; ++c) x[s][c] = vecx[static_cast<size_t>(s) * na + c];
      return x;
    };
    std::vector<std::vector<Rational>> x = build(sol.particular);
    int attempts = 0;
    while (dense_rank(x) < na && attempts < 64) {
      std::vector<Rational> vecx = sol.particular;
      for (auto& nb : sol.nullspace) {
        long coef = next_small();
        if (coef == 0) continue;
        for (size_t k = 0; k < vecx.size(); ++k) vecx[k] += Rational(coef) * nb[k];
      }
      x = build(vecx);
      ++attempts;
    }
    if (dense_rank(x) < na)
      throw std::runtime_error("embed_into_koszul: no injective lift found at level " +
                               std::to_string(i));
    PolyMatrix fi(rk, na, nv);
    for (int s = 0; s < rk; ++s)
      for (int c = 0; c < na; ++c) fi.at(s, c) = Poly::constant(nv, x[s][c]);
    cm.f[i] = fi;
  }
  if (!verify_chain_map(cm))
    throw std::runtime_error("embed_into_koszul: constructed map fails to commute");
  return cm;
}

// ---------------------------------------------------------------------------
// Annihilator check
// ---------------------------------------------------------------------------

namespace {

// Columns spanning g * (appropriately shifted lower-degree part) inside the
// degree-d slice of a free module with the given shifts.
SparseMat multiple_columns(const std::vector<int>& shifts, int d, const Poly& g) {
  const int nv = g.nvars;
  int dg = g.homogeneous_degree();
  long long nrows = 0;
  std::vector<long long> roff(shifts.size());
  for (size_t i = 0; i < shifts.size(); ++i) {
    roff[i] = nrows;
    nrows += monomial_count(nv, d - shifts[i]);
  }
  long long ncols = 0;
  for (int s : shifts) ncols += monomial_count(nv, d - s - dg);
  SparseMat out(nrows, ncols);
  long long cj = 0;
  for (size_t i = 0; i < shifts.size(); ++i) {
    for (auto& bmono : monomial_basis(nv, d - shifts[i] - dg)) {
      for (auto& [mono, coeff] : g.terms)
        out.add(static_cast<int>(roff[i] + monomial_index(nv, monomial_mul(bmono, mono))),
                static_cast<int>(cj), coeff);
      cj++;
    }
  }
  return out;
}

}  // namespace

bool annihilator_check(const FreeComplex& c, const std::vector<Poly>& gens, int max_degree) {
  // precondition: cohomology concentrated in degree 0 up to max_degree
  for (int i = 1; i <= c.length(); ++i)
    for (int t = 0; t <= max_degree; ++t) {
      long long n = 0;
      for (int s : c.shifts[i]) n += monomial_count(c.sig.n_vars(), t - s);
      long long rk_out = slice_rank(c.d[i], c.shifts[i - 1], c.shifts[i], t);
      long long rk_in =
          i < c.length() ? slice_rank(c.d[i + 1], c.shifts[i], c.shifts[i + 1], t) : 0;
      if (n - rk_out - rk_in != 0)
        throw std::runtime_error(
            "annihilator_check: cohomology is not concentrated in degree 0 (H^{-" +
            std::to_string(i) + "} at internal degree " + std::to_string(t) + ")");
    }
  if (c.length() < 1) return gens.empty();
  for (auto& g : gens) {
    if (!g.is_homogeneous()) throw std::runtime_error("annihilator_check: generators must be homogeneous");
    for (int t = 0; t <= max_degree; ++t) {
      SparseMat im = graded_component(c.d[1], c.shifts[0], c.shifts[1], t);
      SparseMat gcols = multiple_columns(c.shifts[0], t, g);
      if (gcols.cols == 0) continue;
      if (rank_exact(hconcat(im, gcols)) != rank_exact(im)) return false;
    }
  }
  return true;
}

}  // namespace adk
