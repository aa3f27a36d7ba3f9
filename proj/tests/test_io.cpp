#include <doctest.h>

#include "adk/io.hpp"
#include "test_util.hpp"

using namespace adk;

TEST_CASE("adinkra json round trip") {
  Adinkra a = load("n2_rhopair_valise");
  json j = adinkra_to_json(a);
  Adinkra b = adinkra_from_json(j);
  CHECK(b.sig == a.sig);
  REQUIRE(b.vertices.size() == a.vertices.size());
  REQUIRE(b.edges.size() == a.edges.size());
  for (size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(b.edges[i].u == a.edges[i].u);
    CHECK(b.edges[i].color == a.edges[i].color);
    CHECK(b.edges[i].dash == a.edges[i].dash);
    CHECK(b.edges[i].arrow == a.edges[i].arrow);
  }
  CHECK(b.metadata.name == a.metadata.name);
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(adinkra_from_json(json::object()), std::runtime_error);
  json j = adinkra_to_json(load("n1_lambda"));
  j["vertices"][0]["parity"] = "ghost";
  CHECK_THROWS_AS(adinkra_from_json(j), std::runtime_error);
  CHECK_THROWS_AS(load_adinkra(data_dir() + "/does_not_exist.json"), std::runtime_error);
}

TEST_CASE("polynomial parsing") {
  VariableSet sig{2, 1, 1};
  int nv = sig.n_vars();
  auto v = [&](int i) { return Poly::variable(nv, i); };
  CHECK(parse_poly("l1", sig) == v(0));
  CHECK(parse_poly("-l2", sig) == -v(1));
  CHECK(parse_poly("0", sig).is_zero());
  CHECK(parse_poly("", sig).is_zero());
  CHECK(parse_poly("3/2*mu1", sig) == v(2).scaled(Rational(3, 2)));
  CHECK(parse_poly("rho1*rhos1", sig) == v(3) * v(4));
  CHECK(parse_poly("l1^2 + l2^2 - mu1^2 + rho1*rhos1", sig) == quadratic_form(sig));
  CHECK(parse_poly("l1 + l2 - 2*l1", sig) == v(1) - v(0));
  CHECK_THROWS_AS(parse_poly("2l1", sig), std::runtime_error);  // '*' is required
  CHECK_THROWS_AS(parse_poly("x7", sig), std::runtime_error);
  CHECK_THROWS_AS(parse_poly("l1 l2 +", sig), std::runtime_error);
}

TEST_CASE("complex and factorization serialization") {
  FreeComplex c = complex_of(load("n4_341"));
  json j = complex_to_json(c);
  CHECK(j["levels"].size() == 3);
  CHECK(j["levels"][0]["homological_degree"] == 0);
  CHECK(j["differentials"].size() == 2);
  CHECK(j["ring"] == "R");
  json m = mf_to_json(valise_mf(load("n2_valise")));
  CHECK(m["rank"] == 2);
  CHECK(m["psi"]["entries"][0][0] == "l1");
}

TEST_CASE("profile csv") {
  FreeComplex c = complex_of(load("n2_valise"));
  HilbertProfile p = hilbert_profile(c, 3);
  std::string csv = profile_to_csv(p, c.length() + 1);
  CHECK(csv.find("homological_degree,d0,d1,d2,d3") == 0);
  CHECK(csv.find("0,2,2,2,2") != std::string::npos);
}

TEST_CASE("chain map document validation") {
  FreeComplex src = complex_of(load("ext1_source"));
  FreeComplex tgt = complex_of(load("ext1_target"));
  json j = json::parse(slurp(data_dir() + "/ext1_map.json"));
  ChainMap cm = chain_map_from_json(j, src, tgt);
  CHECK(cm.shift == 1);
  CHECK(cm.f[1].rows == 2);
  CHECK(cm.f[2].rows == 4);
  // negative level keys are accepted as synonyms
  json j2 = j;
  json comp = json::object();
  for (auto& [k, v] : j["components"].items()) comp["-" + k] = v;
  j2["components"] = comp;
  ChainMap cm2 = chain_map_from_json(j2, src, tgt);
  CHECK(cm2.f[1] == cm.f[1]);
  // wrong shapes throw
  json bad = j;
  bad["components"]["1"][0].push_back("l1");
  CHECK_THROWS_AS(chain_map_from_json(bad, src, tgt), std::runtime_error);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(load("n2_rhopair_valise"));
  CHECK(dot.find("graph adinkra {") == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("label=\"~\"") != std::string::npos);
  std::string plain = to_dot(load("n4_valise"));
  CHECK(plain.find("label=\"~\"") == std::string::npos);
  CHECK(plain.find("style=dashed") != std::string::npos);
}
