#include <doctest.h>

#include "adk/adinkra.hpp"
#include "test_util.hpp"

using namespace adk;

static const char* kLambdaDocs[] = {
    "n1_lambda", "n2_valise",  "n2_koszul",   "n4_valise",  "n4_valise_b", "n4_341_base",
    "n4_341",    "n4_pair",    "n4_koszul_valise", "n6_a1", "n6_a2",       "n7_valise",
    "n7_1771",   "n8_valise",  "ext1_source", "ext1_target", "ext2_source", "ext2_target",
};

static const char* kQDocs[] = {
    "n1_mu",          "n1_rho",        "n1_rhostar",    "n1_rho_neg",
    "n1_rhostar_neg", "pq11",          "n2_rhopair_valise",
    "n2_chiral_121",  "n2_antichiral_121", "n2_twisted_121",
};

TEST_CASE("all plain corpus documents validate") {
  for (const char* name : kLambdaDocs) {
    CAPTURE(name);
    ValidationReport rep = validate(load(name));
    if (!rep.ok) { CAPTURE(rep.violations[0]); }
    CHECK(rep.ok);
  }
}

TEST_CASE("all generalized corpus documents validate") {
  for (const char* name : kQDocs) {
    CAPTURE(name);
    ValidationReport rep = validate_q(load(name));
    if (!rep.ok) { CAPTURE(rep.violations[0]); }
    CHECK(rep.ok);
  }
}

TEST_CASE("validate rejects a flipped dash with a cycle diagnostic") {
  Adinkra a = load("n4_valise");
  a.edges[0].dash = -a.edges[0].dash;
  ValidationReport rep = validate(a);
  CHECK(!rep.ok);
  bool cycle_msg = false;
  for (auto& v : rep.violations)
    if (v.find("4-cycle") != std::string::npos) cycle_msg = true;
  CHECK(cycle_msg);
}

TEST_CASE("validate rejects structural problems") {
  Adinkra a = load("n2_valise");
  SUBCASE("missing edge breaks regularity") {
    a.edges.pop_back();
    CHECK(!validate(a).ok);
  }
  SUBCASE("equal parities break bipartiteness") {
    a.vertices[0].parity = Parity::Fermion;
    CHECK(!validate(a).ok);
  }
  SUBCASE("height jump breaks unimodularity") {
    a.vertices[0].height = -1;
    CHECK(!validate(a).ok);
  }
  SUBCASE("q-signature is rejected by the plain validator") {
    Adinkra b = load("pq11");
    CHECK(!validate(b).ok);
    CHECK(validate_q(b).ok);
  }
}

TEST_CASE("rank sequences") {
  CHECK(rank_sequence(load("n7_1771")).to_string() == "(1,7,7,1)");
  CHECK(rank_sequence(load("n6_a1")).to_string() == "(2,8,6)");
  CHECK(rank_sequence(load("n4_341")).to_string() == "(3,4,1)");
}

TEST_CASE("valise flattening") {
  Adinkra a = load("n7_1771");
  CHECK(!is_valise(a));
  Adinkra v = valise_of(a);
  CHECK(is_valise(v));
  CHECK(rank_sequence(v).to_string() == "(8,8)");
  CHECK(validate(v).ok);
}

TEST_CASE("raising chain on the four-color valise") {
  Adinkra a = load("n4_valise");
  auto r = raisable_vertices(a);
  CHECK(r.size() == 4);  // every boson of a valise
  a = raise_vertex(a, "b0");
  CHECK(rank_sequence(a).to_string() == "(3,4,1)");
  CHECK(validate(a).ok);
  a = raise_vertex(a, "b1");
  CHECK(rank_sequence(a).to_string() == "(2,4,2)");
  CHECK(validate(a).ok);
  a = raise_vertex(a, "b2");
  CHECK(rank_sequence(a).to_string() == "(1,4,3)");
  CHECK(validate(a).ok);
  // f0 is blocked by its edge down to b3
  CHECK_THROWS_AS(raise_vertex(a, "f0"), std::runtime_error);
}

TEST_CASE("raising the seven-color valise to (1,7,7,1)") {
  Adinkra a = load("n7_valise");
  for (int i = 1; i <= 7; ++i) a = raise_vertex(a, "b" + std::to_string(i));
  CHECK(rank_sequence(a).to_string() == "(1,8,7)");
  CHECK(validate(a).ok);
  // exactly one fermion can still be raised: the one not adjacent to b0
  std::vector<std::string> r = raisable_vertices(a);
  std::vector<std::string> fermions;
  for (auto& id : r)
    if (id[0] == 'f') fermions.push_back(id);
  REQUIRE(fermions.size() == 1);
  CHECK(fermions[0] == "f7");
  a = raise_vertex(a, "f7");
  CHECK(rank_sequence(a).to_string() == "(1,7,7,1)");
  CHECK(validate(a).ok);
}

TEST_CASE("lowering inverts raising") {
  Adinkra a = load("n4_341");
  Adinkra b = lower_vertex(a, "b0");
  CHECK(is_valise(b));
  CHECK(validate(b).ok);
  CHECK_THROWS(lower_vertex(a, "b1"));
}

TEST_CASE("koszul adinkra") {
  Adinkra k3 = koszul_adinkra(3);
  CHECK(rank_sequence(k3).to_string() == "(1,3,3,1)");
  CHECK(validate(k3).ok);
  CHECK(validate(koszul_adinkra(4)).ok);
  // document form agrees with the construction
  Adinkra k2 = koszul_adinkra(2);
  Adinkra doc = load("n2_koszul");
  CHECK(rank_sequence(doc) == rank_sequence(k2));
  CHECK(validate(doc).ok);
}

TEST_CASE("graph tensor products") {
  Adinkra t = graph_tensor(load("n2_valise"), load("n2_valise"));
  CHECK(t.sig.n_lambda == 4);
  CHECK(rank_sequence(t).to_string() == "(4,8,4)");
  CHECK(validate(t).ok);
  // mixed signature: lambda (x) mu
  Adinkra m = graph_tensor(load("n1_lambda"), load("n1_mu"));
  CHECK(m.sig.n_lambda == 1);
  CHECK(m.sig.n_mu == 1);
  CHECK(validate_q(m).ok);
  // waved factor keeps its arrows
  Adinkra w = graph_tensor(load("n1_lambda"), load("n2_chiral_121"));
  CHECK(w.sig.n_rho == 2);
  CHECK(validate_q(w).ok);
}

TEST_CASE("rainbow closure and boson eigenvalues") {
  RainbowResult r = rainbow(load("n4_valise"));
  REQUIRE(r.closes);
  for (auto& [id, eps] : r.boson_eigenvalue) CHECK(eps == -1);
  CHECK(r.boson_eigenvalue.size() == 4);
  RainbowResult rb = rainbow(load("n4_valise_b"));
  REQUIRE(rb.closes);
  for (auto& [id, eps] : rb.boson_eigenvalue) CHECK(eps == +1);
  RainbowResult rv = rainbow(load("n4_341_base"));
  REQUIRE(rv.closes);
  for (auto& [id, eps] : rv.boson_eigenvalue) CHECK(eps == +1);
  CHECK(!rainbow(load("n4_koszul_valise")).closes);
  CHECK_THROWS(rainbow(load("n7_valise")));  // odd N
}

TEST_CASE("zero modes") {
  CHECK(zero_modes(load("n7_1771")) == 1);
  CHECK(zero_modes(load("n4_valise")) == 4);
  CHECK(zero_modes(load("n4_341")) == 3);
}

TEST_CASE("rank sequence enumeration") {
  auto seqs = enumerate_rank_sequences(load("n2_valise"), 3);
  REQUIRE(seqs.size() == 2);
  std::vector<std::string> got;
  for (auto& s : seqs) got.push_back(s.to_string());
  CHECK(got[0] == "(1,2,1)");
  CHECK(got[1] == "(2,2)");
  // three colors: the cube admits the fully extended shape
  auto s3 = enumerate_rank_sequences(koszul_adinkra(3), 4);
  bool has1331 = false;
  for (auto& s : s3) has1331 = has1331 || s.to_string() == "(1,3,3,1)";
  CHECK(has1331);
}

TEST_CASE("multiplet action matrices") {
  MultipletAction ma = multiplet_action(load("n2_valise"));
  REQUIRE(ma.q.size() == 2);
  CHECK(ma.basis.size() == 4);
  // each Q is a permutation-with-signs matrix in H on the vertex basis
  for (auto& q : ma.q) {
    int nonzero = 0;
    for (int i = 0; i < q.rows; ++i)
      for (int j = 0; j < q.cols; ++j) nonzero += !q.at(i, j).is_zero();
    CHECK(nonzero == 4);
  }
}
