#include <doctest.h>

#include "adk/clifford.hpp"
#include "test_util.hpp"

using namespace adk;

TEST_CASE("generator actions satisfy the Clifford relations") {
  const char* names[] = {"n2_valise", "n4_valise", "n4_koszul_valise", "n8_valise",
                         "pq11",      "n2_rhopair_valise"};
  for (const char* name : names) {
    CAPTURE(name);
    CliffordAction act = clifford_action(valise_mf(load(name)));
    CAPTURE(act.detail);
    CHECK(act.relations_ok);
  }
}

TEST_CASE("generator matrices are block off-diagonal") {
  CliffordAction act = clifford_action(valise_mf(load("n2_valise")));
  REQUIRE(act.f.size() == 2);
  for (auto& f : act.f) {
    REQUIRE(f.size() == 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(f[i][j] == 0);
        CHECK(f[2 + i][2 + j] == 0);
      }
  }
}

TEST_CASE("irreducible dimension table mod 8") {
  struct Row {
    int n;
    long long d;
    int nu;
    const char* alg;
  };
  const Row rows[] = {{1, 1, 1, "R"},  {2, 2, 1, "C"}, {3, 4, 1, "H"},  {4, 4, 2, "H"},
                      {5, 8, 1, "H"},  {6, 8, 1, "C"}, {7, 8, 1, "R"},  {8, 8, 2, "R"},
                      {9, 16, 1, "R"}, {12, 64, 2, "H"}, {16, 128, 2, "R"}};
  for (auto& r : rows) {
    CAPTURE(r.n);
    IrreducibleDim d = irreducible_dim(r.n);
    CHECK(d.d_r == r.d);
    CHECK(d.nu == r.nu);
    CHECK(d.algebra == r.alg);
  }
  CHECK_THROWS_AS(irreducible_dim(0), std::runtime_error);
}

TEST_CASE("irreducibility by the dimension criterion") {
  CHECK(is_irreducible(valise_mf(load("n2_valise")), 2));
  CHECK(is_irreducible(valise_mf(load("n4_valise")), 4));
  CHECK(is_irreducible(valise_mf(load("n8_valise")), 8));
  CHECK(!is_irreducible(valise_mf(load("n4_koszul_valise")), 4));
  CHECK(!is_irreducible(valise_mf(load("n4_pair")), 4));
  CHECK_THROWS_AS(is_irreducible(valise_mf(load("pq11")), 2), std::runtime_error);
}
