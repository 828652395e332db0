#include "localred/basechange.hpp"

#include "localred/errors.hpp"

namespace localred {

Weierstrass base_change(const Weierstrass& w, const Extension& ext) {
  if (!w.ring()->same_as(*ext.ring->prefix(ext.base_depth)))
    throw DescriptorMismatch("curve is not defined over the base of the extension");
  return map_model(w, [&](const Elt& x) { return ext.embed(x); });
}

BaseChangeReport compare_discriminants(const Weierstrass& w_min, const Extension& ext) {
  BaseChangeReport r;
  r.e = ext.e;
  r.v_L_different = ext.different_valuation();
  const int vK = discriminant(w_min).val();
  r.v_L_delta_K_model = ext.e * vK;
  LocalData ld = tate_algorithm(base_change(w_min, ext));
  r.v_L_delta_L_minimal = ld.v_delta;
  r.drop = r.v_L_delta_K_model - r.v_L_delta_L_minimal;
  r.bound = 12 * (r.v_L_different + ext.e - 1);
  r.u_val = ld.scalings;
  r.conductor_c = Rational(r.u_val, ext.e);
  r.type_L = ld.type;
  return r;
}

Rational base_change_conductor(const Weierstrass& w_min) {
  Invariants inv = invariants(w_min);
  Rational c(inv.disc.val(), 12);
  if (!inv.c4.is_exact_zero()) {
    Valuation v = inv.c4.valuation();
    if (v.finite()) c = min(c, Rational(v.value, 4));
    else if (Rational(v.value, 4) < c)
      throw PrecisionExhausted("v(c4) undetermined below v(Delta)/3");
  }
  return c;
}

std::vector<BoundCheck> check_bounds(const Weierstrass& w_min, const Extension& ext) {
  BaseChangeReport r = compare_discriminants(w_min, ext);
  if (r.type_L.kind != KodairaKind::I0 && r.type_L.kind != KodairaKind::In)
    throw NotSemiStableOverL("E has type " + r.type_L.to_string() + " over L");
  const int e = ext.e, vD = r.v_L_different;
  Invariants inv = invariants(w_min);
  std::vector<BoundCheck> out;
  out.push_back({"compare-m lower", Rational(0), Rational(r.drop), false});
  out.push_back({"compare-m upper", Rational(r.drop), Rational(r.bound), false});
  if (r.type_L.kind == KodairaKind::I0) {
    out.push_back({"potentially good", Rational(inv.disc.val()), Rational(floor_div(12 * (vD - 1), e) + 12), false});
  } else {
    out.push_back({"potentially multiplicative", Rational(inv.c4.val()), Rational(floor_div(4 * (vD - 1), e) + 4),
                   false});
  }
  out.push_back({"conductor", base_change_conductor(w_min), Rational(vD, e) + Rational(1), true});
  return out;
}

Weierstrass quadratic_twist(const Weierstrass& w, const Extension& ext) {
  if (ext.e != 2 || ext.f != 1) throw InvalidDescriptor("twist needs a ramified quadratic extension");
  const RingPtr& K = w.ring();
  const Elt c0 = ext.eisenstein[0], c1 = ext.eisenstein[1];
  if (!c0.ring()->same_as(*K)) throw DescriptorMismatch("extension over a different ring");
  if (K->kind() == RingKind::equal && K->p() == 2) {
    // y -> y + theta (a1 x + a3) with theta^2 + theta = c0 / c1^2, then scale by c1
    if (c1.is_exact_zero()) throw InvalidDescriptor("inseparable quadratic extension");
    Elt c2 = c1 * c1, c4 = c2 * c2;
    return Weierstrass{{c1 * w.a1(), c2 * w.a2() + c0 * w.a1() * w.a1(), c2 * c1 * w.a3(), c4 * w.a4(),
                        c4 * c2 * w.a6() + c4 * c0 * w.a3() * w.a3()}};
  }
  // L = K(sqrt d); twist of Y^2 = X^3 + b2 X^2 + 8 b4 X + 16 b6
  Elt d = c1 * c1 - K->from_int(4) * c0;
  Invariants inv = invariants(w);
  Elt d2 = d * d;
  return Weierstrass{{K->zero(), d * inv.b2, K->zero(), K->from_int(8) * d2 * inv.b4,
                      K->from_int(16) * d2 * d * inv.b6}};
}

}  // namespace localred
