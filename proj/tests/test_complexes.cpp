#include <doctest.h>

#include "adk/complexes.hpp"
#include "adk/cohomology.hpp"
#include "adk/io.hpp"
#include "test_util.hpp"

using namespace adk;

TEST_CASE("complex of a valise reproduces the matrix entries") {
  FreeComplex c = complex_of(load("n2_valise"));
  REQUIRE(c.length() == 1);
  REQUIRE(c.d[1].rows == 2);
  REQUIRE(c.d[1].cols == 2);
  int nv = c.sig.n_vars();
  CHECK(c.d[1].at(0, 0) == Poly::variable(nv, 0));
  CHECK(c.d[1].at(0, 1) == -Poly::variable(nv, 1));
  CHECK(c.d[1].at(1, 0) == Poly::variable(nv, 1));
  CHECK(c.d[1].at(1, 1) == Poly::variable(nv, 0));
  CHECK(c.shifts[0] == std::vector<int>{0, 0});
  CHECK(c.shifts[1] == std::vector<int>{1, 1});
}

TEST_CASE("d^2 = 0 and the Laplacian identity hold for every corpus complex") {
  const char* names[] = {"n4_valise", "n4_341",  "n6_a1",   "n6_a2",    "n7_1771",
                         "n8_valise", "pq11",    "n2_chiral_121", "n2_rhopair_valise",
                         "ext1_source", "ext2_target"};
  for (const char* name : names) {
    CAPTURE(name);
    FreeComplex c = complex_of(load(name));
    CHECK(c.differential_squares_to_zero());
    LaplacianReport rep = check_laplacian(c);
    CAPTURE(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("waved edges select rho or rho-star by arrow direction") {
  FreeComplex c = complex_of(load("n1_rho"));
  int nv = c.sig.n_vars();
  CHECK(c.d[1].at(0, 0) == Poly::variable(nv, 0));  // rho1
  FreeComplex cs = complex_of(load("n1_rhostar"));
  CHECK(cs.d[1].at(0, 0) == Poly::variable(nv, 1));  // rhos1
  FreeComplex cn = complex_of(load("n1_rho_neg"));
  CHECK(cn.d[1].at(0, 0) == -Poly::variable(nv, 0));
}

TEST_CASE("valise matrix factorizations") {
  MatrixFactorization mf = valise_mf(load("n4_valise"));
  CHECK(mf.rank() == 4);
  CHECK(mf.verify());
  CHECK(valise_mf(load("pq11")).verify());
  CHECK(valise_mf(load("n2_rhopair_valise")).verify());
  CHECK_THROWS_AS(valise_mf(load("n4_341")), std::runtime_error);
}

TEST_CASE("tensor product of matrix factorizations") {
  // two one-variable factors combine to the 2x2 block [[l2, l1],[l1, -l2]]
  MatrixFactorization a = valise_mf(load("n1_lambda"));
  MatrixFactorization t = knorrer(a, a);
  CHECK(t.rank() == 2);
  CHECK(t.verify());
  int nv = t.sig.n_vars();
  CHECK(t.psi.at(0, 0) == Poly::variable(nv, 1));
  CHECK(t.psi.at(0, 1) == Poly::variable(nv, 0));
  CHECK(t.psi.at(1, 0) == Poly::variable(nv, 0));
  CHECK(t.psi.at(1, 1) == -Poly::variable(nv, 1));
  // 4x4 (x) 4x4 -> 32x32 factorization of the eight-variable form
  MatrixFactorization big =
      knorrer(valise_mf(load("n4_valise")), valise_mf(load("n4_valise_b")));
  CHECK(big.rank() == 32);
  CHECK(big.sig.n_lambda == 8);
  CHECK(big.verify());
  // mixed kinds also combine
  MatrixFactorization mixed = knorrer(valise_mf(load("n1_lambda")), valise_mf(load("n1_mu")));
  CHECK(mixed.verify());
}

TEST_CASE("chain maps from documents and their cones") {
  SUBCASE("first extension pair") {
    FreeComplex src = complex_of(load("ext1_source"));
    FreeComplex tgt = complex_of(load("ext1_target"));
    json j = json::parse(slurp(data_dir() + "/ext1_map.json"));
    ChainMap cm = chain_map_from_json(j, src, tgt);
    CHECK(cm.shift == 1);
    CHECK(verify_chain_map(cm));
    FreeComplex cn = cone(cm);
    CHECK(cn.rank_at(0) == 4);
    CHECK(cn.rank_at(1) == 8);
    CHECK(cn.rank_at(2) == 4);
    CHECK(cn.differential_squares_to_zero());
  }
  SUBCASE("second extension pair") {
    FreeComplex src = complex_of(load("ext2_source"));
    FreeComplex tgt = complex_of(load("ext2_target"));
    json j = json::parse(slurp(data_dir() + "/ext2_map.json"));
    ChainMap cm = chain_map_from_json(j, src, tgt);
    CHECK(verify_chain_map(cm));
    FreeComplex cn = cone(cm);
    CHECK(cn.rank_at(0) == 5);
    CHECK(cn.rank_at(1) == 8);
    CHECK(cn.rank_at(2) == 3);
    CHECK(cn.differential_squares_to_zero());
  }
  SUBCASE("a perturbed component is rejected") {
    FreeComplex src = complex_of(load("ext1_source"));
    FreeComplex tgt = complex_of(load("ext1_target"));
    json j = json::parse(slurp(data_dir() + "/ext1_map.json"));
    j["components"]["2"][0][0] = "l1";
    ChainMap cm = chain_map_from_json(j, src, tgt);
    CHECK(!verify_chain_map(cm));
    CHECK_THROWS_AS(cone(cm), std::runtime_error);
  }
}

TEST_CASE("cone of a raising map is quasi-isomorphic to the raised complex") {
  Adinkra a = load("n2_valise");
  FreeComplex cn = cone_of_raise(a, "b0");
  CHECK(cn.differential_squares_to_zero());
  FreeComplex raised = complex_of(raise_vertex(a, "b0"));
  HilbertProfile pc = hilbert_profile(cn, 5);
  HilbertProfile pr = hilbert_profile(raised, 5);
  // certificate: identical cohomology Hilbert functions levelwise
  for (int i = 0; i <= 2; ++i) CHECK(pc.row(i) == pr.row(i));
  CHECK_THROWS_AS(cone_of_raise(load("n4_341"), "f0"), std::runtime_error);
}

TEST_CASE("unrolling over the quotient ring") {
  FreeComplex c = complex_of(load("n2_valise"));
  UnrollResult u = unroll(c, 5);
  CHECK(u.truncation == 5);
  CHECK(u.d_squared_zero_mod_q);
  CHECK(u.unrolled.ring == RingTag::RModQ);
  // the two-level complex unrolls to the 2-periodic tail ... -> R^2 -> R^2
  for (int l = 0; l <= 5; ++l) CHECK(u.unrolled.rank_at(l) == 2);
  // generator shifts climb by two per period
  CHECK(u.unrolled.shifts[2] == std::vector<int>{2, 2});
  CHECK(u.unrolled.shifts[3] == std::vector<int>{3, 3});
  // default truncation is length + 4
  CHECK(unroll(c).truncation == c.length() + 4);
}

TEST_CASE("koszul embedding") {
  SUBCASE("the fully extended four-color shape embeds") {
    Adinkra a = load("n4_valise");
    a = raise_vertex(a, "b0");
    a = raise_vertex(a, "b1");
    a = raise_vertex(a, "b2");  // (1,4,3)
    ChainMap cm = embed_into_koszul(a);
    CHECK(verify_chain_map(cm));
    REQUIRE(cm.f.size() == 3);
    CHECK(cm.f[0].at(0, 0) == Poly::constant(cm.source.sig.n_vars(), 1));
  }
  SUBCASE("a valise is rejected (too many zero modes)") {
    CHECK_THROWS_AS(embed_into_koszul(load("n4_valise")), std::runtime_error);
  }
  SUBCASE("non-plain signatures are rejected") {
    CHECK_THROWS_AS(embed_into_koszul(load("pq11")), std::runtime_error);
  }
}

TEST_CASE("annihilator membership for the paired-variable ideal") {
  VariableSet sig{0, 0, 2};
  int nv = sig.n_vars();
  auto v = [&](int i) { return Poly::variable(nv, i); };
  // variables: rho1, rhos1, rho2, rhos2
  std::vector<Poly> gens = {v(0) * v(1) + v(2) * v(3), v(0) * v(1) - v(2) * v(3),
                            v(0) * v(3) + v(2) * v(1), v(0) * v(1) + v(2) * v(1)};
  FreeComplex chiral = complex_of(load("n2_chiral_121"));
  CHECK(annihilator_check(chiral, gens, 6));
  FreeComplex twisted = complex_of(load("n2_twisted_121"));
  CHECK(!annihilator_check(twisted, gens, 6));
}
