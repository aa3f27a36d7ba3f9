#pragma once
// Clifford generator actions extracted from valise matrix factorizations,
// relation verification, and the mod-8 irreducible-dimension table.

#include <string>
#include <vector>

#include "adk/complexes.hpp"
#include "adk/exactalg.hpp"

namespace adk {

using QMat = std::vector<std::vector<Rational>>;

struct CliffordAction {
  VariableSet sig;
  std::vector<QMat> f;  // one 2n x 2n generator per variable
  bool relations_ok = false;
  std::string detail;  // first failing relation if any
};

// f_v = [[0, psi_v],[phi_v, 0]] with psi_v, phi_v the coefficient of
// variable v in psi, phi.  Verifies f_u f_v + f_v f_u = B(e_u, e_v) * id
// for all pairs (B the polarization q(x+y) - q(x) - q(y); in particular
// f_v^2 = q(e_v) * id).
CliffordAction clifford_action(const MatrixFactorization& mf);

struct IrreducibleDim {
  long long d_r = 0;  // real dimension of an irreducible Cl_0 module
  int nu = 1;         // number of irreducibles (2 when N = 0, 4 mod 8)
  std::string algebra;  // R / C / H label, informational
};
IrreducibleDim irreducible_dim(int n);

// Dimension criterion: the valise factorization has rank d_r(N).
bool is_irreducible(const MatrixFactorization& mf, int n);

}  // namespace adk
