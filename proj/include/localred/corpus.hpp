#pragma once

#include <cstdint>
#include <random>

#include "localred/weierstrass.hpp"

namespace localred {

struct CorpusParams {
  int digits = 12;         // B: coefficients are drawn from O_K / pi^B
  int max_valuation = 4;   // v(a_i) uniform on [0, max_valuation] ...
  double zero_weight = 1;  // ... or a_i = 0, with this relative weight
};

// Generator for case `index` of a corpus with the given seed.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index);

Elt random_element(const RingPtr& R, std::mt19937_64& rng, int min_val, int digits);
Elt random_unit(const RingPtr& R, std::mt19937_64& rng, int digits);
Weierstrass random_curve(const RingPtr& R, std::mt19937_64& rng, const CorpusParams& params = {});
// Random transform with unit u.
Transform random_transform(const RingPtr& R, std::mt19937_64& rng, int digits);

}  // namespace localred
