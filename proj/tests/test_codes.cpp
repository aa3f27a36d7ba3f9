#include <doctest.h>

#include "adk/codes.hpp"
#include "test_util.hpp"

using namespace adk;

TEST_CASE("builtin codes: dimension, double evenness, coset rank sequences") {
  struct Row {
    const char* name;
    int length, dim;
    const char* seq;
  };
  const Row rows[] = {
      {"t1", 1, 0, "(1,1)"},
      {"t2", 2, 0, "(1,2,1)"},
      {"d4", 4, 1, "(1,4,3)"},
      {"d6", 6, 2, "(1,6,7,2)"},
      {"d10", 10, 4, "(1,10,21,20,10,2)"},
      {"e7", 7, 3, "(1,7,7,1)"},
      {"e8", 8, 4, "(1,8,7)"},
      {"e16", 16, 8, "(1,16,57,112,70)"},
  };
  for (auto& r : rows) {
    CAPTURE(r.name);
    auto c = builtin_code(r.name);
    REQUIRE(c.has_value());
    CHECK(c->length == r.length);
    CHECK(c->dimension() == r.dim);
    CHECK(is_doubly_even(*c));
    CHECK(coset_rank_sequence(*c).to_string() == r.seq);
  }
  CHECK(!builtin_code("nope").has_value());
}

TEST_CASE("direct sums via '+' names") {
  struct Row {
    const char* name;
    const char* seq;
  };
  const Row rows[] = {{"t1+d4", "(1,5,7,3)"},
                      {"t2+d4", "(1,6,12,10,3)"},
                      {"t1+e8", "(1,9,15,7)"},
                      {"d4+d4", "(1,8,22,24,9)"}};
  for (auto& r : rows) {
    CAPTURE(r.name);
    auto c = builtin_code(r.name);
    REQUIRE(c.has_value());
    CHECK(is_doubly_even(*c));
    CHECK(coset_rank_sequence(*c).to_string() == r.seq);
  }
}

TEST_CASE("code files parse and agree with the builtins") {
  const char* names[] = {"t1", "d4", "d6", "d10", "e7", "e8", "e16"};
  for (const char* name : names) {
    CAPTURE(name);
    BinaryCode file = parse_code(slurp(data_dir() + "/codes/" + std::string(name) + ".code"));
    auto built = builtin_code(name);
    REQUIRE(built.has_value());
    CHECK(file.length == built->length);
    CHECK(file.dimension() == built->dimension());
    CHECK(coset_rank_sequence(file) == coset_rank_sequence(*built));
    // round trip through the text format
    BinaryCode again = parse_code(code_to_text(file));
    CHECK(again.length == file.length);
    CHECK(again.gens == file.gens);
  }
}

TEST_CASE("parse_code error handling") {
  CHECK_THROWS_AS(parse_code(""), std::runtime_error);
  CHECK_THROWS_AS(parse_code("11x1"), std::runtime_error);
  CHECK_THROWS_AS(parse_code("1111\n111"), std::runtime_error);
  CHECK_THROWS_AS(parse_code("length=5\n1111"), std::runtime_error);
  BinaryCode c = parse_code("# comment\n\n  1111  \n");
  CHECK(c.length == 4);
  CHECK(c.gens == std::vector<std::uint32_t>{0b1111});
}

TEST_CASE("code to adinkra: topology, heights, dashing") {
  auto d4 = builtin_code("d4");
  Adinkra a = code_to_adinkra(*d4);
  CHECK(rank_sequence(a).to_string() == "(1,4,3)");
  CHECK(validate(a).ok);
  // vertex ids are coset representative bitstrings
  CHECK(a.vertex_index("c0000") >= 0);

  Adinkra e7a = code_to_adinkra(*builtin_code("e7"));
  CHECK(rank_sequence(e7a).to_string() == "(1,7,7,1)");
  CHECK(validate(e7a).ok);

  Adinkra e8a = code_to_adinkra(*builtin_code("e8"));
  CHECK(rank_sequence(e8a).to_string() == "(1,8,7)");
  CHECK(validate(e8a).ok);

  Adinkra d6a = code_to_adinkra(*builtin_code("d6"));
  CHECK(rank_sequence(d6a).to_string() == "(1,6,7,2)");
  CHECK(validate(d6a).ok);
}

TEST_CASE("guards") {
  BinaryCode big;
  big.length = 21;
  CHECK_THROWS_AS(coset_rank_sequence(big), std::runtime_error);
  auto e16 = builtin_code("e16");
  CHECK_THROWS_AS(code_to_adinkra(*e16), std::runtime_error);  // length 16 > 12
  BinaryCode odd = parse_code("1110");
  CHECK_THROWS_AS(code_to_adinkra(odd), std::runtime_error);  // not doubly even
}
