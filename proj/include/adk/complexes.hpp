#pragma once
// Complexes of free modules attached to Adinkras: construction, adjoints,
// Laplacian and matrix-factorization checks, unrolling over the quotient
// ring, chain maps and cones, Koszul embeddings, Knorrer tensor products,
// and annihilator checks.

#include <optional>
#include <string>
#include <vector>

#include "adk/adinkra.hpp"
#include "adk/exactalg.hpp"

namespace adk {

enum class RingTag { R, RModQ };

// A complex of free modules concentrated in homological degrees 0, -1, ...,
// -m.  Level i holds C^{-i}; generator internal shifts are recorded per
// basis element (for Adinkra complexes, the vertex heights).
struct FreeComplex {
  VariableSet sig;
  RingTag ring = RingTag::R;
  std::vector<std::vector<std::string>> labels;  // per level
  std::vector<std::vector<int>> shifts;          // per level
  // d[i] : C^{-i} -> C^{-i+1} for i = 1..m; d[0] is an empty placeholder.
  std::vector<PolyMatrix> d;

  int length() const { return static_cast<int>(labels.size()) - 1; }  // m
  long long rank_at(int level) const { return static_cast<long long>(labels[level].size()); }
  // d*d = 0 (exactly over R; modulo q over R/<q>)
  bool differential_squares_to_zero() const;
};

// One free summand per vertex (shift = height); differential from edges.
FreeComplex complex_of(const Adinkra& a);

// Adjoint differentials: adjoint[i] : C^{-i} -> C^{-i-1} is the b-transpose
// of d[i+1], for i = 0..m-1.
std::vector<PolyMatrix> adjoint_of(const FreeComplex& c);

struct LaplacianReport {
  bool ok = true;
  std::string detail;  // first failure location if not ok
};
// (d + d^+)^2 = q * id on every level, as exact polynomial identities.
LaplacianReport check_laplacian(const FreeComplex& c);

struct MatrixFactorization {
  VariableSet sig;
  PolyMatrix psi, phi;  // psi*phi = phi*psi = q*id
  int rank() const { return psi.rows; }
  bool verify() const;
};

// The (d, d^+) pair of a two-level Adinkra; throws for non-valise input.
MatrixFactorization valise_mf(const Adinkra& a);

// Graded tensor product of matrix factorizations over disjoint variable
// ranges (combined signature concatenates both); rank 2*n*m factorization of
// q1 + q2.
MatrixFactorization knorrer(const MatrixFactorization& a, const MatrixFactorization& b);

// A chain map f : S -> T of homological degree `shift` (component f[i] maps
// S^{-i} -> T^{-i+shift}).  Components are stored for i = 0..length(S).
struct ChainMap {
  FreeComplex source, target;
  int shift = 0;
  std::vector<PolyMatrix> f;
};

// Commutation f d_S = d_T f, checked exactly over R (componentwise equality
// of the two composites; for complexes over R/<q> equality modulo q).
bool verify_chain_map(const ChainMap& m);

// Mapping cone of a degree-1 chain map: Cone^{-k} = T^{-k} (+) S^{-k}, with
// differential [[d_T, f],[0, -d_S]].
FreeComplex cone(const ChainMap& m);

// Cone of the raising map: for a raisable vertex v at height h, the
// two-term complex S = (R[h+2] --q--> R[h]) maps into C(A) by 1 |-> v and
// 1 |-> d^+ v; returns the cone, quasi-isomorphic to C(raise_vertex(A, v)).
FreeComplex cone_of_raise(const Adinkra& a, const std::string& v);

// Unrolled 2-periodic-tail complex over R/<q> up to homological truncation
// level L, with the inclusion certificate data.
struct UnrollResult {
  FreeComplex unrolled;        // over R/<q>, levels 0..L
  int truncation = 0;          // L
  bool d_squared_zero_mod_q = false;
};
UnrollResult unroll(const FreeComplex& c, int truncation_level = -1);

// Degreewise-injective chain map C(A) -> C(Koszul(N)) with constant rational
// components, built level by level by exact linear solves.  Requires a fully
// extended Adinkra (unique minimal-height vertex, which is the unique zero
// mode).  Throws with an explanatory message when the hypothesis fails.
ChainMap embed_into_koszul(const Adinkra& a);

// True iff every generator (a polynomial over the complex's variables)
// annihilates coker(d^1): g * C^0 lies in im(d^1) in every internal degree
// <= max_degree.  Precondition (checked): H^{-i} = 0 for i > 0 up to
// max_degree.
bool annihilator_check(const FreeComplex& c, const std::vector<Poly>& gens, int max_degree);

}  // namespace adk
