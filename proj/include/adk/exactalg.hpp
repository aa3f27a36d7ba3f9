#pragma once
// Exact rational arithmetic and graded linear algebra over polynomial rings.
//
// Ground field: Q (via GMP mpq_class).  Variables come in three flavors,
// determined by a VariableSet signature (n_lambda, n_mu, n_rho):
//   lambda_i  with lambda_i^2 contributing +1 to the quadratic form,
//   mu_j      with mu_j^2 contributing -1,
//   paired    rho_k, rho_k^* contributing the product rho_k rho_k^*.
// The associated quadratic form is
//   q = sum lambda_i^2 - sum mu_j^2 + sum rho_k rho_k^*.
// The involution b fixes lambda, negates mu, and swaps rho_k <-> rho_k^*.
//
// Monomial order: graded lexicographic (variables in their index order,
// exponent vectors compared lexicographically, larger first), fixed so that
// graded slices are reproducible byte-for-byte.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adk {

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// VariableSet
// ---------------------------------------------------------------------------

enum class VarKind { Lambda, Mu, Rho, RhoStar };

struct VariableSet {
  int n_lambda = 0;
  int n_mu = 0;
  int n_rho = 0;

  int n_vars() const { return n_lambda + n_mu + 2 * n_rho; }
  int n_colors() const { return n_lambda + n_mu + n_rho; }

  bool operator==(const VariableSet& o) const {
    return n_lambda == o.n_lambda && n_mu == o.n_mu && n_rho == o.n_rho;
  }

  // Variable index layout: [0, n_lambda) lambdas, then [n_lambda,
  // n_lambda+n_mu) mus, then rho pairs (rho_k at even offset, rho_k^* odd).
  VarKind kind(int v) const;
  // rho <-> rho^* partner; identity on lambda/mu.
  int b_image(int v) const;
  // sign picked up under the involution b (-1 on mu variables).
  int b_sign(int v) const;
  // colors are 1-based: 1..n_lambda lambda colors, then mu, then rho.
  int color_of_var(int v) const;
  bool color_is_waved(int color) const;  // true for rho colors
  // For lambda/mu colors: the variable. For rho colors: the rho_k variable
  // (rho_k^* is var_of_color(color)+1).
  int var_of_color(int color) const;
  std::string var_name(int v) const;
  // q(e_v) for a coordinate vector, and the polarized form
  // B(e_u, e_v) = q(e_u + e_v) - q(e_u) - q(e_v).
  Rational q_of_basis_vector(int v) const;
  Rational bilinear(int u, int v) const;
};

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

// Exponent vector, length = sig.n_vars().
using Monomial = std::vector<std::uint8_t>;

int monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

struct Poly {
  int nvars = 0;
  // graded-lex-ordered map from exponent vector to nonzero coefficient
  std::map<Monomial, Rational, std::greater<Monomial>> terms;

  Poly() = default;
  explicit Poly(int nv) : nvars(nv) {}

  static Poly zero(int nv) { return Poly(nv); }
  static Poly constant(int nv, const Rational& c);
  static Poly variable(int nv, int v);
  static Poly monomial_term(int nv, const Monomial& m, const Rational& c);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // -1 for the zero polynomial; otherwise the common degree, or throws if
  // not homogeneous.
  int homogeneous_degree() const;
  bool is_homogeneous() const;
  int total_degree() const;  // -1 for zero

  std::string to_string(const VariableSet& sig) const;
};

// The involution b extended multiplicatively to polynomials.
Poly involution_b(const VariableSet& sig, const Poly& p);
// q = sum lambda^2 - sum mu^2 + sum rho rho^*.
Poly quadratic_form(const VariableSet& sig);
// Is p a rational multiple of m (both over the same variables)?  Returns the
// ratio if so.
std::optional<Rational> multiple_of(const Poly& p, const Poly& m);

// ---------------------------------------------------------------------------
// Polynomial matrices
// ---------------------------------------------------------------------------

struct PolyMatrix {
  int rows = 0, cols = 0;
  int nvars = 0;
  std::vector<Poly> e;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int nv);
  static PolyMatrix identity(int n, int nv);

  Poly& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix transpose() const;
  PolyMatrix scaled(const Poly& p) const;
  bool is_zero() const;
  bool operator==(const PolyMatrix& o) const;
  // transpose + entrywise involution b
  PolyMatrix b_transpose(const VariableSet& sig) const;
  // true iff this == p * identity
  bool is_scalar(const Poly& p) const;
  // entrywise ``multiple of q'' test (zero matrix included)
  bool is_zero_mod(const Poly& q) const;
};

// ---------------------------------------------------------------------------
// Monomial bases and graded slices
// ---------------------------------------------------------------------------

// dim_k R_d for R a polynomial ring in nvars variables (0 for d < 0).
long long monomial_count(int nvars, int d);
// Basis of R_d in graded-lex order (cached).  d < 0 yields the empty basis.
const std::vector<Monomial>& monomial_basis(int nvars, int d);
// Index of m within monomial_basis(nvars, deg(m)).
int monomial_index(int nvars, const Monomial& m);

// dim_k (R/<q>)_d = dim R_d - dim R_{d-2} (q a degree-2 nonzerodivisor).
long long quotient_dim(const VariableSet& sig, int d);

// Sparse rational matrix, column-major.
struct SparseMat {
  long long rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> col_entries;

  explicit SparseMat(long long r = 0, long long c = 0)
      : rows(r), cols(c), col_entries(static_cast<size_t>(c)) {}
  void add(int r, int c, const Rational& v) { col_entries[c].emplace_back(r, v); }
};

// Exact rank over Q (sparse elimination with Markowitz-style pivoting).
long long rank_exact(const SparseMat& m);

// Degree-d slice of a matrix of homogeneous polynomials between shifted free
// modules.  Entry (i,j) must be homogeneous of degree col_shift[j] -
// row_shift[i] (or zero); otherwise throws with the offending location.
// Basis ordering: generators in order, monomials graded-lex within each.
SparseMat graded_component(const PolyMatrix& m, const std::vector<int>& row_shifts,
                           const std::vector<int>& col_shifts, int d);

// Columns spanning q * (degree d-2 part) inside the degree-d slice space of
// free modules with the given shifts.
SparseMat q_multiple_columns(const std::vector<int>& shifts, int d, const Poly& q);

// Rank of the degree-d slice; if quotient_q is nonnull, the rank of the map
// induced on (R/<q>)-slices, computed as rank([A | W]) - rank(W) with W the
// q-multiple columns of the row space (valid because entries commute with q).
long long slice_rank(const PolyMatrix& m, const std::vector<int>& row_shifts,
                     const std::vector<int>& col_shifts, int d,
                     const Poly* quotient_q = nullptr);

// Horizontal concatenation helper.
SparseMat hconcat(const SparseMat& a, const SparseMat& b);

}  // namespace adk
