#include "localred/localdata.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "localred/errors.hpp"

namespace localred {

std::string KodairaType::to_string() const {
  switch (kind) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::In: return "I" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I0s: return "I0*";
    case KodairaKind::Ins: return "I" + std::to_string(n) + "*";
    case KodairaKind::IVs: return "IV*";
    case KodairaKind::IIIs: return "III*";
    case KodairaKind::IIs: return "II*";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
  if (s == "I0") return {KodairaKind::I0, 0};
  if (s == "II") return {KodairaKind::II, 0};
  if (s == "III") return {KodairaKind::III, 0};
  if (s == "IV") return {KodairaKind::IV, 0};
  if (s == "I0*") return {KodairaKind::I0s, 0};
  if (s == "IV*") return {KodairaKind::IVs, 0};
  if (s == "III*") return {KodairaKind::IIIs, 0};
  if (s == "II*") return {KodairaKind::IIs, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!num.empty() && std::all_of(num.begin(), num.end(), ::isdigit)) {
      int n = std::stoi(num);
      if (star) return {KodairaKind::Ins, n};
      if (n >= 1) return {KodairaKind::In, n};
    }
  }
  throw ParseError("unknown Kodaira type '" + s + "'");
}

bool KodairaType::additive() const { return kind != KodairaKind::I0 && kind != KodairaKind::In; }

int component_count(const KodairaType& t) {
  switch (t.kind) {
    case KodairaKind::I0: return 1;
    case KodairaKind::In: return t.n;
    case KodairaKind::II: return 1;
    case KodairaKind::III: return 2;
    case KodairaKind::IV: return 3;
    case KodairaKind::I0s: return 5;
    case KodairaKind::Ins: return t.n + 5;
    case KodairaKind::IVs: return 7;
    case KodairaKind::IIIs: return 8;
    case KodairaKind::IIs: return 9;
  }
  return 0;
}

int tame_conductor_exponent(const KodairaType& t) {
  if (t.kind == KodairaKind::I0) return 0;
  if (t.kind == KodairaKind::In) return 1;
  return 2;
}

namespace {

struct Tate {
  const ResidueField& k;
  RingPtr R;
  Elt pi;
  Weierstrass w;
  Transform total;

  void step(const Transform& t) {
    w = apply_transform(w, t);
    total = compose(total, t);
  }
  FieldElt red(const Elt& x, int j) const { return x.div_pi(j).residue(); }
  Elt lift(FieldElt a) const { return R->lift(a); }
  Elt pipow(int j) const { return pi.pow(static_cast<unsigned>(j)); }

  // Singular point of the reduction (exists when pi | disc).
  std::pair<FieldElt, FieldElt> singular_point() const {
    FieldElt a1 = w.a1().residue(), a2 = w.a2().residue(), a3 = w.a3().residue();
    FieldElt a4 = w.a4().residue(), a6 = w.a6().residue();
    if (k.p() == 2) {
      if (a1 != 0) {
        FieldElt x0 = k.mul(a3, k.inv(a1));
        FieldElt y0 = k.mul(k.add(k.mul(x0, x0), a4), k.inv(a1));
        return {x0, y0};
      }
      FieldElt x0 = k.pth_root(a4);
      FieldElt y0 = k.pth_root(k.add(k.mul(a2, k.mul(x0, x0)), a6));
      return {x0, y0};
    }
    const FieldElt half = k.inv(k.from_int(2));
    for (FieldElt x = 0; x < k.q(); ++x) {
      FieldElt y = k.neg(k.mul(k.add(k.mul(a1, x), a3), half));
      FieldElt x2 = k.mul(x, x), x3 = k.mul(x2, x);
      FieldElt F = k.sub(k.add(k.add(k.mul(y, y), k.mul(a1, k.mul(x, y))), k.mul(a3, y)),
                         k.add(k.add(x3, k.mul(a2, x2)), k.add(k.mul(a4, x), a6)));
      FieldElt Fx = k.sub(k.mul(a1, y),
                          k.add(k.add(k.mul(k.from_int(3), x2), k.mul(k.from_int(2), k.mul(a2, x))), a4));
      if (F == 0 && Fx == 0) return {x, y};
    }
    throw AssertionFailed("no singular point on a reduction with vanishing discriminant");
  }

  // Root of poly with vanishing derivative (the repeated root).
  FieldElt repeated_root(const std::vector<FieldElt>& poly) const {
    std::vector<FieldElt> d;
    for (std::size_t i = 1; i < poly.size(); ++i) d.push_back(k.mul(k.from_int(static_cast<std::int64_t>(i)), poly[i]));
    for (FieldElt x : k.roots(poly))
      if (k.eval(d, x) == 0) return x;
    throw AssertionFailed("expected a repeated root");
  }
};

void finish(LocalData& out, const Tate& st, KodairaType type, int n, int m) {
  out.minimal_model = st.w;
  out.transform = st.total;
  out.type = type;
  out.m = m;
  out.v_delta = n;
  out.f = n - m + 1;
}

}  // namespace

LocalData tate_algorithm(const Weierstrass& w_in) {
  const RingPtr& R = w_in.ring();
  Tate st{R->residue_field(), R, R->uniformizer(), w_in, identity_transform(R)};
  const ResidueField& k = st.k;
  LocalData out;
  out.v_delta_input = discriminant(w_in).val();
  for (;;) {
    Invariants inv = invariants(st.w);
    const int n = inv.disc.val();
    if (n == 0) {
      finish(out, st, {KodairaKind::I0, 0}, 0, 1);
      return out;
    }
    auto [x0, y0] = st.singular_point();
    st.step(translation(st.lift(x0), R->zero(), st.lift(y0)));
    inv = invariants(st.w);
    if (inv.b2.is_unit()) {
      finish(out, st, {KodairaKind::In, n}, n, n);
      return out;
    }
    if (!st.w.a6().val_at_least(2)) {
      finish(out, st, {KodairaKind::II, 0}, n, 1);
      return out;
    }
    if (!inv.b8.val_at_least(3)) {
      finish(out, st, {KodairaKind::III, 0}, n, 2);
      return out;
    }
    if (!inv.b6.val_at_least(3)) {
      finish(out, st, {KodairaKind::IV, 0}, n, 3);
      return out;
    }
    // Arrange pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
    {
      Elt s, t;
      if (k.p() == 2) {
        s = st.lift(k.pth_root(st.w.a2().residue()));
        t = st.pi * st.lift(k.pth_root(st.red(st.w.a6(), 2)));
      } else if (k.p() == 3) {
        s = st.w.a1();
        t = st.w.a3();
      } else {
        Elt half = R->from_int(2).inv_unit();
        s = -(st.w.a1() * half);
        t = -(st.w.a3() * half);
      }
      st.step(translation(R->zero(), s, t));
    }
    const FieldElt b = st.red(st.w.a2(), 1), c = st.red(st.w.a4(), 2), d = st.red(st.w.a6(), 3);
    auto K = [&](std::int64_t v) { return k.from_int(v); };
    // discriminant of T^3 + bT^2 + cT + d
    FieldElt bc = k.mul(b, c);
    FieldElt disc3 = k.add(k.sub(k.sub(k.mul(bc, bc), k.mul(K(4), k.mul(c, k.mul(c, c)))),
                                 k.add(k.mul(K(4), k.mul(k.mul(b, k.mul(b, b)), d)), k.mul(K(27), k.mul(d, d)))),
                           k.mul(K(18), k.mul(bc, d)));
    if (disc3 != 0) {
      finish(out, st, {KodairaKind::I0s, 0}, n, 5);
      return out;
    }
    const std::vector<FieldElt> P{d, c, b, k.one()};
    const bool triple = k.sub(k.mul(b, b), k.mul(K(3), c)) == 0;
    const FieldElt alpha = triple ? k.roots(P).at(0) : st.repeated_root(P);
    st.step(translation(st.pi * st.lift(alpha), R->zero(), R->zero()));
    if (!triple) {
      int ix = 3, iy = 3, mx = 2, my = 2;
      for (;;) {
        FieldElt xa3 = st.red(st.w.a3(), my), xa6 = st.red(st.w.a6(), mx + my);
        if (k.add(k.mul(xa3, xa3), k.mul(K(4), xa6)) != 0) break;
        FieldElt beta = st.repeated_root({k.neg(xa6), xa3, k.one()});
        st.step(translation(R->zero(), R->zero(), st.pipow(my) * st.lift(beta)));
        ++my;
        ++iy;
        FieldElt xa2 = st.red(st.w.a2(), 1), xa4 = st.red(st.w.a4(), mx + 1);
        xa6 = st.red(st.w.a6(), mx + my);
        if (k.sub(k.mul(xa4, xa4), k.mul(K(4), k.mul(xa2, xa6))) != 0) break;
        FieldElt a = st.repeated_root({xa6, xa4, xa2});
        st.step(translation(st.pipow(mx) * st.lift(a), R->zero(), R->zero()));
        ++mx;
        ++ix;
      }
      const int nu = ix + iy - 5;
      finish(out, st, {KodairaKind::Ins, nu}, n, nu + 5);
      return out;
    }
    // Triple root moved to 0: pi^2 | a2, pi^3 | a4, pi^4 | a6.
    FieldElt a32 = st.red(st.w.a3(), 2), a64 = st.red(st.w.a6(), 4);
    if (k.add(k.mul(a32, a32), k.mul(K(4), a64)) != 0) {
      finish(out, st, {KodairaKind::IVs, 0}, n, 7);
      return out;
    }
    FieldElt beta = st.repeated_root({k.neg(a64), a32, k.one()});
    st.step(translation(R->zero(), R->zero(), st.pipow(2) * st.lift(beta)));
    if (!st.w.a4().val_at_least(4)) {
      finish(out, st, {KodairaKind::IIIs, 0}, n, 8);
      return out;
    }
    if (!st.w.a6().val_at_least(6)) {
      finish(out, st, {KodairaKind::IIs, 0}, n, 9);
      return out;
    }
    st.step(scaling(st.pi));
    ++out.scalings;
    if (out.scalings > out.v_delta_input / 12)
      throw AssertionFailed("minimization loop did not terminate");
  }
}

bool is_minimal(const Weierstrass& w) {
  if (discriminant(w).val() < 12) return true;
  return tate_algorithm(w).scalings == 0;
}

namespace {

// Rational double point types: A_n, D_n, E_n.
struct Rdp {
  char family;
  int n;
};

int resolution_steps(const std::vector<Rdp>& sing) {
  int best = 0;
  for (const auto& s : sing) {
    std::vector<Rdp> next;
    if (s.family == 'A') {
      if (s.n <= 0) continue;
      if (s.n >= 3) next.push_back({'A', s.n - 2});
    } else if (s.family == 'D') {
      next.push_back({'A', 1});
      if (s.n - 2 == 2) {
        next.push_back({'A', 1});
        next.push_back({'A', 1});
      } else if (s.n - 2 == 3) {
        next.push_back({'A', 3});
      } else {
        next.push_back({'D', s.n - 2});
      }
    } else {
      if (s.n == 6) next.push_back({'A', 5});
      if (s.n == 7) next.push_back({'D', 6});
      if (s.n == 8) next.push_back({'E', 7});
    }
    best = std::max(best, 1 + resolution_steps(next));
  }
  return best;
}

Rdp singularity_of(const KodairaType& t) {
  switch (t.kind) {
    case KodairaKind::I0:
    case KodairaKind::II: return {'A', 0};
    case KodairaKind::In: return {'A', t.n - 1};
    case KodairaKind::III: return {'A', 1};
    case KodairaKind::IV: return {'A', 2};
    case KodairaKind::I0s: return {'D', 4};
    case KodairaKind::Ins: return {'D', t.n + 4};
    case KodairaKind::IVs: return {'E', 6};
    case KodairaKind::IIIs: return {'E', 7};
    case KodairaKind::IIs: return {'E', 8};
  }
  return {'A', 0};
}

}  // namespace

BlowupCount blowup_count(const KodairaType& type, int v_delta, bool experimental_exact) {
  switch (type.kind) {
    case KodairaKind::I0:
    case KodairaKind::II: return {0, true};
    case KodairaKind::In: return {type.n / 2, true};
    case KodairaKind::III:
    case KodairaKind::IV: return {1, true};
    case KodairaKind::IVs: return {4, true};
    default: break;
  }
  if (experimental_exact) return {resolution_steps({singularity_of(type)}), true};
  int bound = 0;
  if (type.kind == KodairaKind::IIs) bound = 8;
  if (type.kind == KodairaKind::IIIs) bound = 7;
  if (type.kind == KodairaKind::I0s || type.kind == KodairaKind::Ins) bound = type.n + 4;
  return {std::min(bound, v_delta - 1), false};
}

DeterminationLevels determination_levels(int vd_floor, int v_delta, int t) {
  DeterminationLevels d;
  d.weierstrass_offset = 12 * vd_floor + 19;
  d.regular_from_weierstrass = 2 * t + 1;
  d.regular_total = 2 * v_delta + 12 * vd_floor + 18;
  return d;
}

}  // namespace localred
