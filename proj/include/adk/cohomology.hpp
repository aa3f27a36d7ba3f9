#pragma once
// Degreewise exact cohomology Hilbert functions for linear complexes over R
// and R/<q>, Betti consistency checks for linear strands, and the rank-2
// quadric (Segre) line-bundle modules with their linear Betti numbers.

#include <map>
#include <string>
#include <vector>

#include "adk/complexes.hpp"
#include "adk/exactalg.hpp"

namespace adk {

struct HilbertProfile {
  int max_degree = 0;
  // (homological level i >= 0, internal degree t) -> dim H^{-i}(C)_t
  std::map<std::pair<int, int>, long long> dims;

  long long at(int level, int t) const {
    auto it = dims.find({level, t});
    return it == dims.end() ? 0 : it->second;
  }
  std::vector<long long> row(int level) const {
    std::vector<long long> r;
    for (int t = 0; t <= max_degree; ++t) r.push_back(at(level, t));
    return r;
  }
  bool operator==(const HilbertProfile& o) const {
    return max_degree == o.max_degree && dims == o.dims;
  }
};

// Exact cohomology dimensions per (level, internal degree <= D); over
// R/<q> when the complex carries that ring tag.
HilbertProfile hilbert_profile(const FreeComplex& c, int max_degree);

// Euler identity sum_i (-1)^i dim H^i_t = sum_i (-1)^i dim C^i_t per degree.
bool euler_consistent(const FreeComplex& c, const HilbertProfile& p);

struct BettiTable {
  int base_degree = 0;
  std::vector<long long> b;
};

// HF(t) = sum_k (-1)^k b_k dim R_{t - base - k} for all t = 0..D, where hf
// lists HF(0..D) and nvars is the ambient variable count.
bool betti_consistency(const std::vector<long long>& hf, const BettiTable& claim, int nvars);

// dim of the degree-d piece of the twisted Segre module M(n): (n+1+d)(d+1).
long long hilb_formula(int n, int d);
// Coefficient of t^d in ((n+1) - 2n t + (n-1) t^2) / (1-t)^4.
long long hilb_series_coeff(int n, int d);

// Linear Betti numbers (b0, b1, b2) of M(n) by brute-force graded linear
// algebra over the four Segre variables.
BettiTable betti_linear(int n);

}  // namespace adk
