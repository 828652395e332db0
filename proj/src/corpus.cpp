#include "localred/corpus.hpp"

#include <algorithm>

namespace localred {

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Elt random_element(const RingPtr& R, std::mt19937_64& rng, int min_val, int digits) {
  std::uniform_int_distribution<std::uint32_t> dig(0, R->residue_field().q() - 1);
  Elt x = R->zero(), pw = R->uniformizer().pow(static_cast<unsigned>(min_val));
  for (int i = min_val; i < std::min(digits, R->cap()); ++i) {
    FieldElt d = dig(rng);
    if (d != 0) x += R->lift(d) * pw;
    pw *= R->uniformizer();
  }
  return x;
}

Elt random_unit(const RingPtr& R, std::mt19937_64& rng, int digits) {
  std::uniform_int_distribution<std::uint32_t> dig(1, R->residue_field().q() - 1);
  return R->lift(dig(rng)) + random_element(R, rng, 1, digits);
}

Weierstrass random_curve(const RingPtr& R, std::mt19937_64& rng, const CorpusParams& params) {
  std::uniform_real_distribution<double> u(0, params.max_valuation + 1 + params.zero_weight);
  Weierstrass w;
  for (auto& x : w.a) {
    double v = u(rng);
    if (v >= params.max_valuation + 1)
      x = R->zero();
    else
      x = random_element(R, rng, static_cast<int>(v), params.digits);
  }
  return w;
}

Transform random_transform(const RingPtr& R, std::mt19937_64& rng, int digits) {
  return Transform{random_unit(R, rng, digits), random_element(R, rng, 0, digits), random_element(R, rng, 0, digits),
                   random_element(R, rng, 0, digits)};
}

}  // namespace localred
