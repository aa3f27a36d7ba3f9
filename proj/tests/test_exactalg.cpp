#include <doctest.h>

#include "adk/exactalg.hpp"

using namespace adk;

TEST_CASE("variable layout, names, involution data") {
  VariableSet sig{2, 1, 2};
  CHECK(sig.n_vars() == 7);
  CHECK(sig.n_colors() == 5);
  CHECK(sig.var_name(0) == "l1");
  CHECK(sig.var_name(1) == "l2");
  CHECK(sig.var_name(2) == "mu1");
  CHECK(sig.var_name(3) == "rho1");
  CHECK(sig.var_name(4) == "rhos1");
  CHECK(sig.var_name(5) == "rho2");
  CHECK(sig.var_name(6) == "rhos2");
  CHECK(sig.kind(0) == VarKind::Lambda);
  CHECK(sig.kind(2) == VarKind::Mu);
  CHECK(sig.kind(3) == VarKind::Rho);
  CHECK(sig.kind(4) == VarKind::RhoStar);
  CHECK(sig.b_image(3) == 4);
  CHECK(sig.b_image(4) == 3);
  CHECK(sig.b_image(0) == 0);
  CHECK(sig.b_sign(2) == -1);
  CHECK(sig.b_sign(0) == 1);
  // colors: 1,2 lambda; 3 mu; 4,5 rho
  CHECK(!sig.color_is_waved(3));
  CHECK(sig.color_is_waved(4));
  CHECK(sig.var_of_color(1) == 0);
  CHECK(sig.var_of_color(3) == 2);
  CHECK(sig.var_of_color(4) == 3);
  CHECK(sig.var_of_color(5) == 5);
}

TEST_CASE("quadratic form, bilinear polarization, involution") {
  VariableSet sig{1, 1, 1};
  Poly q = quadratic_form(sig);
  CHECK(q.to_string(sig) == "l1^2 - mu1^2 + rho1*rhos1");
  CHECK(q.homogeneous_degree() == 2);
  CHECK(involution_b(sig, q) == q);
  Poly mu = Poly::variable(sig.n_vars(), 1);
  CHECK(involution_b(sig, mu) == -mu);
  Poly rho = Poly::variable(sig.n_vars(), 2);
  Poly rhos = Poly::variable(sig.n_vars(), 3);
  CHECK(involution_b(sig, rho) == rhos);
  CHECK(involution_b(sig, rho * rho * mu) == -(rhos * rhos * mu));
  CHECK(sig.q_of_basis_vector(0) == 1);
  CHECK(sig.q_of_basis_vector(1) == -1);
  CHECK(sig.q_of_basis_vector(2) == 0);
  CHECK(sig.bilinear(2, 3) == 1);  // rho1, rhos1 pair up
  CHECK(sig.bilinear(0, 0) == 2);  // 2 q(e_v)
  CHECK(sig.bilinear(0, 1) == 0);
}

TEST_CASE("polynomial arithmetic and homogeneity") {
  int nv = 2;
  Poly a = Poly::variable(nv, 0) + Poly::variable(nv, 1);
  Poly sq = a * a;
  VariableSet sig{2, 0, 0};
  CHECK(sq.to_string(sig) == "l1^2 + 2*l1*l2 + l2^2");
  CHECK(sq.homogeneous_degree() == 2);
  CHECK(sq.is_homogeneous());
  Poly mixed = sq + Poly::variable(nv, 0);
  CHECK(!mixed.is_homogeneous());
  CHECK(mixed.total_degree() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(Poly::zero(nv).homogeneous_degree() == -1);
  auto ratio = multiple_of(sq.scaled(Rational(3, 2)), sq);
  REQUIRE(ratio.has_value());
  CHECK(*ratio == Rational(3, 2));
  CHECK(!multiple_of(sq, a).has_value());
}

TEST_CASE("monomial bases and counts") {
  CHECK(monomial_count(4, 3) == 20);
  CHECK(monomial_count(4, 0) == 1);
  CHECK(monomial_count(4, -1) == 0);
  CHECK(static_cast<long long>(monomial_basis(3, 2).size()) == 6);
  // graded-lex: basis is sorted with larger exponent vectors first
  auto& b = monomial_basis(2, 2);
  CHECK(b[0] == Monomial({2, 0}));
  CHECK(b[1] == Monomial({1, 1}));
  CHECK(b[2] == Monomial({0, 2}));
  for (size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(2, b[i]) == static_cast<int>(i));
  VariableSet sig{7, 0, 0};
  CHECK(quotient_dim(sig, 0) == 1);
  CHECK(quotient_dim(sig, 1) == 7);
  CHECK(quotient_dim(sig, 2) == monomial_count(7, 2) - 1);
}

TEST_CASE("exact sparse rank") {
  SparseMat m(3, 3);
  m.add(0, 0, 1);
  m.add(1, 1, 2);
  m.add(0, 2, 1);
  m.add(1, 2, 2);  // col2 = col0 + col1
  CHECK(rank_exact(m) == 2);
  SparseMat z(5, 4);
  CHECK(rank_exact(z) == 0);
}

TEST_CASE("graded slices and quotient slice rank") {
  VariableSet sig{2, 0, 0};
  int nv = sig.n_vars();
  // the 2x2 valise matrix [[l1, -l2], [l2, l1]]
  PolyMatrix d(2, 2, nv);
  d.at(0, 0) = Poly::variable(nv, 0);
  d.at(0, 1) = -Poly::variable(nv, 1);
  d.at(1, 0) = Poly::variable(nv, 1);
  d.at(1, 1) = Poly::variable(nv, 0);
  std::vector<int> rsh{0, 0}, csh{1, 1};
  // degree-1 slice: R_0^2 -> R_1^2, injective
  CHECK(slice_rank(d, rsh, csh, 1) == 2);
  // degree-2 slice: R_1^2 (dim 4) -> R_2^2, still injective over R
  CHECK(slice_rank(d, rsh, csh, 2) == 4);
  // over R/<q>: det d = q, so the cokernel has constant Hilbert function 2
  // and the kernel of each slice is nonzero from degree 2 on
  Poly q = quadratic_form(sig);
  long long rk = slice_rank(d, rsh, csh, 3, &q);
  long long dom = 2 * quotient_dim(sig, 2);
  long long cod = 2 * quotient_dim(sig, 3);
  CHECK(cod - rk == 2);  // coker dim 2 at degree 3
  CHECK(dom - rk == 2);  // kernel dim 2 at degree 3
  // non-homogeneous entry throws with a location
  PolyMatrix bad = d;
  bad.at(0, 0) = Poly::variable(nv, 0) + Poly::constant(nv, 1);
  CHECK_THROWS(graded_component(bad, rsh, csh, 1));
}

TEST_CASE("b-transpose and matrix predicates") {
  VariableSet sig{1, 1, 0};
  int nv = sig.n_vars();
  PolyMatrix d(2, 2, nv);
  d.at(0, 0) = Poly::variable(nv, 0);
  d.at(0, 1) = Poly::variable(nv, 1);
  d.at(1, 0) = Poly::variable(nv, 1);
  d.at(1, 1) = Poly::variable(nv, 0);
  PolyMatrix dt = d.b_transpose(sig);
  CHECK(dt.at(0, 1) == -Poly::variable(nv, 1));
  CHECK(dt.at(0, 0) == Poly::variable(nv, 0));
  Poly q = quadratic_form(sig);
  CHECK((d * dt).is_scalar(q));
  CHECK((d * dt - PolyMatrix::identity(2, nv).scaled(q)).is_zero());
  CHECK((d * dt).is_zero_mod(q));
  CHECK(!d.is_zero_mod(q));
}
