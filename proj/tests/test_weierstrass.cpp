#include "doctest_main.hpp"

#include <map>

#include "localred/errors.hpp"
#include "localred/extension.hpp"
#include "localred/weierstrass.hpp"
#include "test_util.hpp"

using namespace localred;

namespace {

RingPtr zp(std::uint32_t p, int prec) {
  return Ring::make_base(RingKind::mixed, ResidueField::standard(p, 1), prec);
}

Weierstrass random_curve(const RingPtr& R, std::mt19937_64& rng) {
  Weierstrass w;
  for (auto& x : w.a) x = testutil::random_elt(R, rng);
  return w;
}

Transform random_transform(const RingPtr& R, std::mt19937_64& rng) {
  return {testutil::random_unit(R, rng), testutil::random_elt(R, rng), testutil::random_elt(R, rng),
          testutil::random_elt(R, rng)};
}

// Bivariate polynomials in X, Y as an independent substitution oracle.
using Poly2 = std::map<std::pair<int, int>, Elt>;

Poly2 mul(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (auto& [ka, va] : a)
    for (auto& [kb, vb] : b) {
      auto k = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, va * vb);
      else
        it->second += va * vb;
    }
  return out;
}
Poly2 add(Poly2 a, const Poly2& b) {
  for (auto& [k, v] : b) {
    auto it = a.find(k);
    if (it == a.end())
      a.emplace(k, v);
    else
      it->second += v;
  }
  return a;
}
Poly2 scal(const Elt& c, const Poly2& a) {
  Poly2 out;
  for (auto& [k, v] : a) out.emplace(k, c * v);
  return out;
}

// F(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6 with x, y polynomials.
Poly2 equation(const Weierstrass& w, const Poly2& x, const Poly2& y) {
  Elt m1 = w.ring()->from_int(-1);
  Poly2 f = mul(y, y);
  f = add(f, scal(w.a1(), mul(x, y)));
  f = add(f, scal(w.a3(), y));
  f = add(f, scal(m1, mul(x, mul(x, x))));
  f = add(f, scal(-w.a2(), mul(x, x)));
  f = add(f, scal(-w.a4(), x));
  f = add(f, Poly2{{{0, 0}, -w.a6()}});
  return f;
}

}  // namespace

TEST_CASE("invariants of y^2 = x^3 - x") {
  auto R = zp(2, 20);
  auto w = make_curve(R, {0, 0, 0, -1, 0});
  auto inv = invariants(w);
  CHECK(inv.disc == R->from_int(64));
  CHECK(inv.c4 == R->from_int(48));
  CHECK(inv.disc.val() == 6);
  auto w37 = make_curve(R, {0, 0, 1, -1, 0});
  CHECK(invariants(w37).disc == R->from_int(37));
}

TEST_CASE("transform laws") {
  std::mt19937_64 rng(5);
  auto W9 = Ring::make_base(RingKind::mixed, ResidueField::standard(3, 2), 10);
  auto F2 = Ring::make_base(RingKind::equal, ResidueField::standard(2, 1), 16);
  for (auto R : {zp(2, 30), zp(5, 12), W9, F2}) {
    for (int it = 0; it < 25; ++it) {
      auto w = random_curve(R, rng);
      auto T1 = random_transform(R, rng), T2 = random_transform(R, rng);
      auto w1 = apply_transform(w, T1);
      auto i0 = invariants(w), i1 = invariants(w1);
      CHECK(i1.disc * T1.u.pow(12) == i0.disc);
      CHECK(i1.c4 * T1.u.pow(4) == i0.c4);
      CHECK(i1.c6 * T1.u.pow(6) == i0.c6);
      auto lhs = apply_transform(w1, T2);
      auto rhs = apply_transform(w, compose(T1, T2));
      CHECK(models_equal_mod(lhs, rhs, R->cap()));
      auto back = apply_transform(w1, invert(T1));
      CHECK(models_equal_mod(back, w, R->cap()));
      auto T3 = random_transform(R, rng);
      CHECK(transforms_equal_mod(compose(compose(T1, T2), T3), compose(T1, compose(T2, T3)), R->cap()));
      CHECK(transforms_equal_mod(compose(T1, invert(T1)), identity_transform(R), R->cap()));
      CHECK(transforms_equal_mod(transform_between(T1, T2), compose(invert(T1), T2), R->cap()));
      CHECK(models_equal_mod(pullback(w1, T1), w, R->cap()));
    }
  }
}

TEST_CASE("substitution oracle") {
  std::mt19937_64 rng(9);
  auto R = zp(3, 15);
  for (int it = 0; it < 20; ++it) {
    auto w = random_curve(R, rng);
    auto T = random_transform(R, rng);
    auto w1 = apply_transform(w, T);
    Poly2 X{{{1, 0}, R->one()}}, Y{{{0, 1}, R->one()}};
    Elt u2 = T.u * T.u;
    Poly2 x = add(scal(u2, X), Poly2{{{0, 0}, T.r}});
    Poly2 y = add(add(scal(u2 * T.u, Y), scal(u2 * T.s, X)), Poly2{{{0, 0}, T.t}});
    Poly2 lhs = equation(w, x, y);
    Poly2 rhs = scal(T.u.pow(6), equation(w1, X, Y));
    for (auto& [k, v] : add(lhs, scal(R->from_int(-1), rhs))) CHECK(v == R->zero());
  }
}

TEST_CASE("non-unit scalings") {
  std::mt19937_64 rng(1);
  auto R = zp(2, 40);
  for (int it = 0; it < 20; ++it) {
    Weierstrass w0;
    for (auto& x : w0.a) x = testutil::random_elt(R, rng).truncate(20);
    Elt u = R->from_int(2) * testutil::random_unit(R, rng);
    Transform T{u, testutil::random_elt(R, rng), testutil::random_elt(R, rng), testutil::random_elt(R, rng)};
    auto w = pullback(w0, T);
    auto back = apply_transform(w, T);
    CHECK(models_equal_mod(back, w0, 14));
    CHECK((discriminant(w) - u.pow(12) * discriminant(w0)).val_at_least(20));
  }
  auto w = make_curve(R, {0, 0, 0, 0, 1});
  CHECK_THROWS_AS(apply_transform(w, scaling(R->from_int(2))), NonIntegralResult);
}

TEST_CASE("composition of pure scalings and translations") {
  auto R = zp(5, 10);
  Transform a{R->from_int(2), R->from_int(3), R->zero(), R->zero()};
  Transform b{R->from_int(7), R->from_int(11), R->zero(), R->zero()};
  auto c = compose(a, b);
  CHECK(c.u == R->from_int(14));
  CHECK(c.r == R->from_int(4 * 11 + 3));
  CHECK(c.s == R->zero());
  CHECK(c.t == R->zero());
}

TEST_CASE("reduce_model") {
  auto R = zp(2, 10);
  auto w = make_curve(R, {1, 0, 1, 12, 100});
  auto w3 = reduce_model(w, 2);
  CHECK(w3.a6().precision() == 3);
  CHECK(w3.a6() == R->from_int(4).truncate(3));
  auto T = Transform{R->from_int(3), R->from_int(1), R->from_int(5), R->from_int(2)};
  CHECK(models_equal_mod(reduce_model(apply_transform(w, T), 2), apply_transform(w3, reduce_transform(T, 2)), 3));
  CHECK_THROWS_AS(reduce_model(w3, 5), PrecisionExhausted);
}
