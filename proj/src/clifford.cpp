#include "adk/clifford.hpp"

namespace adk {

namespace {

QMat coefficient_matrix(const PolyMatrix& m, int v) {
  QMat out(m.rows, std::vector<Rational>(m.cols, 0));
  Monomial mono(m.nvars, 0);
  mono[v] = 1;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      auto it = m.at(i, j).terms.find(mono);
      if (it != m.at(i, j).terms.end()) out[i][j] = it->second;
    }
  return out;
}

QMat mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  QMat r(n, std::vector<Rational>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

bool is_scalar_mat(const QMat& a, const Rational& c) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? c : Rational(0))) return false;
  return true;
}

}  // namespace

CliffordAction clifford_action(const MatrixFactorization& mf) {
  if (!mf.verify()) throw std::runtime_error("clifford_action: not a matrix factorization");
  CliffordAction act;
  act.sig = mf.sig;
  const int n = mf.rank();
  const int nv = mf.sig.n_vars();
  for (int v = 0; v < nv; ++v) {
    QMat psiv = coefficient_matrix(mf.psi, v);
    QMat phiv = coefficient_matrix(mf.phi, v);
    QMat f(2 * n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        f[i][n + j] = psiv[i][j];
        f[n + i][j] = phiv[i][j];
      }
    act.f.push_back(std::move(f));
  }
  act.relations_ok = true;
  for (int u = 0; u < nv && act.relations_ok; ++u)
    for (int v = u; v < nv; ++v) {
      QMat anti = mul(act.f[u], act.f[v]);
      QMat ba = mul(act.f[v], act.f[u]);
      for (size_t i = 0; i < anti.size(); ++i)
        for (size_t j = 0; j < anti.size(); ++j) anti[i][j] += ba[i][j];
      if (!is_scalar_mat(anti, mf.sig.bilinear(u, v))) {
        act.relations_ok = false;
        act.detail = "relation fails for variables " + mf.sig.var_name(u) + ", " +
                     mf.sig.var_name(v);
        break;
      }
    }
  return act;
}

IrreducibleDim irreducible_dim(int n) {
  if (n < 1) throw std::runtime_error("irreducible_dim: N must be >= 1");
  IrreducibleDim r;
  switch (((n % 8) + 8) % 8) {
    case 0:
      r.d_r = 1LL << ((n - 2) / 2);
      r.nu = 2;
      r.algebra = "R";
      break;
    case 1:
    case 7:
      r.d_r = 1LL << ((n - 1) / 2);
      r.nu = 1;
      r.algebra = "R";
      break;
    case 2:
    case 6:
      r.d_r = 1LL << (n / 2);
      r.nu = 1;
      r.algebra = "C";
      break;
    case 3:
    case 5:
      r.d_r = 1LL << ((n + 1) / 2);
      r.nu = 1;
      r.algebra = "H";
      break;
    case 4:
      r.d_r = 1LL << (n / 2);
      r.nu = 2;
      r.algebra = "H";
      break;
  }
  return r;
}

bool is_irreducible(const MatrixFactorization& mf, int n) {
  if (mf.sig.n_mu > 0 || mf.sig.n_rho > 0)
    throw std::runtime_error("is_irreducible: lambda-only signatures only");
  return mf.rank() == irreducible_dim(n).d_r;
}

}  // namespace adk
