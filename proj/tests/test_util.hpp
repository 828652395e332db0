#pragma once

#include <random>

#include "localred/weierstrass.hpp"

namespace testutil {

inline localred::Elt random_elt(const localred::RingPtr& R, std::mt19937_64& rng, int min_val = 0) {
  const auto& k = R->residue_field();
  std::uniform_int_distribution<std::uint32_t> dig(0, k.q() - 1);
  localred::Elt pi = R->uniformizer();
  localred::Elt x = R->zero();
  localred::Elt pw = R->one();
  for (int i = 0; i < R->cap(); ++i) {
    if (i >= min_val) x += R->lift(dig(rng)) * pw;
    pw *= pi;
  }
  return x;
}

inline localred::Elt random_unit(const localred::RingPtr& R, std::mt19937_64& rng) {
  const auto& k = R->residue_field();
  std::uniform_int_distribution<std::uint32_t> dig(1, k.q() - 1);
  return random_elt(R, rng, 1) + R->lift(dig(rng));
}

// Random curve with coefficient valuations skewed towards [0,4].
inline localred::Weierstrass skewed_curve(const localred::RingPtr& R, std::mt19937_64& rng, int digits = 12) {
  std::uniform_int_distribution<int> vd(0, 5);
  localred::Weierstrass w;
  for (auto& x : w.a) {
    int v = vd(rng);
    if (v == 5) {
      x = R->zero();
      continue;
    }
    x = random_elt(R, rng, v);
    // keep only `digits` digits so the model is exact
    auto ds = x.digits();
    localred::Elt y = R->zero(), pw = R->one();
    for (int i = 0; i < std::min<int>(digits, static_cast<int>(ds.size())); ++i) {
      y += R->lift(ds[i]) * pw;
      pw *= R->uniformizer();
    }
    x = y;
  }
  return w;
}

}  // namespace testutil
