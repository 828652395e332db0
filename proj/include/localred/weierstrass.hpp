#pragma once

#include <array>
#include <string>

#include "localred/ring.hpp"

namespace localred {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct Weierstrass {
  std::array<Elt, 5> a;  // a1, a2, a3, a4, a6

  const Elt& a1() const { return a[0]; }
  const Elt& a2() const { return a[1]; }
  const Elt& a3() const { return a[2]; }
  const Elt& a4() const { return a[3]; }
  const Elt& a6() const { return a[4]; }
  const RingPtr& ring() const { return a[0].ring(); }
  int precision() const;
  std::string to_string() const;
};

Weierstrass make_curve(const RingPtr& R, std::array<std::int64_t, 5> a);

struct Invariants {
  Elt b2, b4, b6, b8, c4, c6, disc;
};

Invariants invariants(const Weierstrass& w);
Elt discriminant(const Weierstrass& w);

// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct Transform {
  Elt u, r, s, t;
  const RingPtr& ring() const { return u.ring(); }
  std::string to_string() const;
};

Transform identity_transform(const RingPtr& R);
Transform scaling(const Elt& u);
Transform translation(const Elt& r, const Elt& s, const Elt& t);

// Model in the new coordinates; NonIntegralResult if u^i fails to divide.
Weierstrass apply_transform(const Weierstrass& w, const Transform& t);
// The model w0 with apply_transform(w0, t) = w (polynomial, always integral).
Weierstrass pullback(const Weierstrass& w, const Transform& t);
// apply(apply(W, t1), t2) = apply(W, compose(t1, t2)).
Transform compose(const Transform& t1, const Transform& t2);
// Requires a unit u.
Transform invert(const Transform& t);
// compose(invert(t1), t2) by exact division; NonIntegralResult if not integral.
Transform transform_between(const Transform& t1, const Transform& t2);

Weierstrass reduce_model(const Weierstrass& w, int level);
Transform reduce_transform(const Transform& t, int level);
bool models_equal_mod(const Weierstrass& x, const Weierstrass& y, int k);
bool transforms_equal_mod(const Transform& x, const Transform& y, int k);

// Coefficientwise image under a ring homomorphism.
template <class F>
Weierstrass map_model(const Weierstrass& w, F&& f) {
  return Weierstrass{{f(w.a[0]), f(w.a[1]), f(w.a[2]), f(w.a[3]), f(w.a[4])}};
}
template <class F>
Transform map_transform(const Transform& t, F&& f) {
  return Transform{f(t.u), f(t.r), f(t.s), f(t.t)};
}

}  // namespace localred
