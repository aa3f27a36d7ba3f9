#pragma once
// Doubly-even binary codes, coset leader weight enumeration, and the
// code -> Adinkra topology construction with dashing search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adk/adinkra.hpp"

namespace adk {

struct BinaryCode {
  int length = 0;                   // N <= 20
  std::vector<std::uint32_t> gens;  // generator rows; coordinate i (1-based)
                                    // is bit (N - i), i.e. leftmost text char
                                    // = highest bit
  std::string name;

  int dimension() const;  // rank over GF(2)
};

// All weights of codewords divisible by 4 (full enumeration; dim <= 20).
bool is_doubly_even(const BinaryCode& c);

// Cosets of the code in F_2^N counted by minimal Hamming weight.
RankSequence coset_rank_sequence(const BinaryCode& c);

// Vertices = cosets (height = minimal coset weight, parity = weight mod 2),
// color-i edges join cosets differing by e_i, dashing found by the
// backtracking search described in the docs; result validates.  N <= 12.
Adinkra code_to_adinkra(const BinaryCode& c);

// Direct sum (a on the high coordinates, b on the low ones).
BinaryCode code_sum(const BinaryCode& a, const BinaryCode& b);

// Text format: one generator bit-string per line; blank lines and lines
// starting with '#' ignored; an optional "length=N" line fixes N (needed for
// the zero code).
BinaryCode parse_code(const std::string& text);
std::string code_to_text(const BinaryCode& c);

// Built-ins: t1, t2, d4, d6, d10, e7, e8, e16; names may be joined with '+'
// for direct sums (e.g. "t1+e8").
std::optional<BinaryCode> builtin_code(const std::string& name);

}  // namespace adk
