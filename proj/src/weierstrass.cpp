#include "localred/weierstrass.hpp"

#include <algorithm>
#include <sstream>

#include "localred/errors.hpp"

namespace localred {

namespace {

Elt c(const RingPtr& R, std::int64_t n) { return R->from_int(n); }

void check_ring(const Weierstrass& w) {
  for (const auto& x : w.a)
    if (!x.valid() || !x.ring()->same_as(*w.ring()))
      throw DescriptorMismatch("curve coefficients over different rings");
}

}  // namespace

int Weierstrass::precision() const {
  int p = a[0].precision();
  for (const auto& x : a) p = std::min(p, x.precision());
  return p;
}

std::string Weierstrass::to_string() const {
  std::ostringstream os;
  const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
  for (int i = 0; i < 5; ++i) os << (i ? ", " : "[") << names[i] << "=" << a[i].to_string();
  os << "]";
  return os.str();
}

std::string Transform::to_string() const {
  std::ostringstream os;
  os << "[u=" << u.to_string() << ", r=" << r.to_string() << ", s=" << s.to_string()
     << ", t=" << t.to_string() << "]";
  return os.str();
}

Weierstrass make_curve(const RingPtr& R, std::array<std::int64_t, 5> a) {
  Weierstrass w;
  for (int i = 0; i < 5; ++i) w.a[i] = R->from_int(a[i]);
  return w;
}

Invariants invariants(const Weierstrass& w) {
  check_ring(w);
  const RingPtr& R = w.ring();
  const Elt &a1 = w.a1(), &a2 = w.a2(), &a3 = w.a3(), &a4 = w.a4(), &a6 = w.a6();
  Invariants v;
  v.b2 = a1 * a1 + c(R, 4) * a2;
  v.b4 = c(R, 2) * a4 + a1 * a3;
  v.b6 = a3 * a3 + c(R, 4) * a6;
  v.b8 = a1 * a1 * a6 + c(R, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - c(R, 24) * v.b4;
  v.c6 = -(v.b2 * v.b2 * v.b2) + c(R, 36) * v.b2 * v.b4 - c(R, 216) * v.b6;
  v.disc = -(v.b2 * v.b2 * v.b8) - c(R, 8) * v.b4 * v.b4 * v.b4 - c(R, 27) * v.b6 * v.b6 +
           c(R, 9) * v.b2 * v.b4 * v.b6;
  return v;
}

Elt discriminant(const Weierstrass& w) { return invariants(w).disc; }

Transform identity_transform(const RingPtr& R) { return {R->one(), R->zero(), R->zero(), R->zero()}; }

Transform scaling(const Elt& u) {
  const RingPtr& R = u.ring();
  return {u, R->zero(), R->zero(), R->zero()};
}

Transform translation(const Elt& r, const Elt& s, const Elt& t) { return {r.ring()->one(), r, s, t}; }

Weierstrass apply_transform(const Weierstrass& w, const Transform& T) {
  check_ring(w);
  const RingPtr& R = w.ring();
  const Elt &a1 = w.a1(), &a2 = w.a2(), &a3 = w.a3(), &a4 = w.a4(), &a6 = w.a6();
  const Elt &r = T.r, &s = T.s, &t = T.t;
  std::array<Elt, 5> num;
  num[0] = a1 + c(R, 2) * s;
  num[1] = a2 - s * a1 + c(R, 3) * r - s * s;
  num[2] = a3 + r * a1 + c(R, 2) * t;
  num[3] = a4 - s * a3 + c(R, 2) * r * a2 - (t + r * s) * a1 + c(R, 3) * r * r - c(R, 2) * s * t;
  num[4] = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  const int weights[5] = {1, 2, 3, 4, 6};
  Weierstrass out;
  if (T.u.is_unit()) {
    Elt ui = T.u.inv_unit();
    Elt pw = R->one();
    int done = 0;
    for (int i = 0; i < 5; ++i) {
      while (done < weights[i]) {
        pw *= ui;
        ++done;
      }
      out.a[i] = num[i] * pw;
    }
    return out;
  }
  for (int i = 0; i < 5; ++i) {
    try {
      out.a[i] = num[i].div(T.u.pow(static_cast<unsigned>(weights[i])));
    } catch (const NonIntegralResult&) {
      throw NonIntegralResult("a" + std::to_string(weights[i]) + "' is not integral");
    }
  }
  return out;
}

Weierstrass pullback(const Weierstrass& wp, const Transform& T) {
  check_ring(wp);
  const RingPtr& R = wp.ring();
  const Elt &u = T.u, &r = T.r, &s = T.s, &t = T.t;
  Elt u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Weierstrass w;
  w.a[0] = u * wp.a1() - c(R, 2) * s;
  w.a[1] = u2 * wp.a2() + s * w.a[0] - c(R, 3) * r + s * s;
  w.a[2] = u3 * wp.a3() - r * w.a[0] - c(R, 2) * t;
  w.a[3] = u4 * wp.a4() + s * w.a[2] - c(R, 2) * r * w.a[1] + (t + r * s) * w.a[0] - c(R, 3) * r * r +
           c(R, 2) * s * t;
  w.a[4] = u6 * wp.a6() - r * w.a[3] - r * r * w.a[1] - r * r * r + t * w.a[2] + t * t + r * t * w.a[0];
  return w;
}

Transform compose(const Transform& a, const Transform& b) {
  Transform out;
  Elt ua2 = a.u * a.u;
  out.u = a.u * b.u;
  out.r = a.r + ua2 * b.r;
  out.s = a.s + a.u * b.s;
  out.t = a.t + ua2 * a.u * b.t + ua2 * a.s * b.r;
  return out;
}

Transform invert(const Transform& T) {
  if (!T.u.is_unit()) throw NonUnit("inverse of a transform with non-unit u");
  Elt ui = T.u.inv_unit();
  Elt ui2 = ui * ui;
  return {ui, -(T.r * ui2), -(T.s * ui), (T.r * T.s - T.t) * ui2 * ui};
}

Transform transform_between(const Transform& a, const Transform& b) {
  Elt u2 = a.u * a.u;
  Elt u3 = u2 * a.u;
  Transform out;
  out.u = b.u.div(a.u);
  out.r = (b.r - a.r).div(u2);
  out.s = (b.s - a.s).div(a.u);
  out.t = (a.r * a.s - a.t + b.t - a.s * b.r).div(u3);
  return out;
}

Weierstrass reduce_model(const Weierstrass& w, int level) {
  if (w.precision() < level + 1)
    throw PrecisionExhausted("model known to " + std::to_string(w.precision()) + " digits, need " +
                             std::to_string(level + 1));
  return map_model(w, [&](const Elt& x) { return x.truncate(level + 1); });
}

Transform reduce_transform(const Transform& t, int level) {
  return map_transform(t, [&](const Elt& x) { return x.truncate(level + 1); });
}

bool models_equal_mod(const Weierstrass& x, const Weierstrass& y, int k) {
  for (int i = 0; i < 5; ++i)
    if (!x.a[i].equals_mod(y.a[i], k)) return false;
  return true;
}

bool transforms_equal_mod(const Transform& x, const Transform& y, int k) {
  return x.u.equals_mod(y.u, k) && x.r.equals_mod(y.r, k) && x.s.equals_mod(y.s, k) &&
         x.t.equals_mod(y.t, k);
}

}  // namespace localred
