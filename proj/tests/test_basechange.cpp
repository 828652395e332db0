#include "doctest_main.hpp"

#include "localred/basechange.hpp"
#include "localred/errors.hpp"
#include "test_util.hpp"

using namespace localred;

namespace {

RingPtr zp(std::uint32_t p, int prec) {
  return Ring::make_base(RingKind::mixed, ResidueField::standard(p, 1), prec);
}
RingPtr fpt(std::uint32_t p, int prec) {
  return Ring::make_base(RingKind::equal, ResidueField::standard(p, 1), prec);
}

Extension eis(const RingPtr& K, std::vector<Elt> c) {
  ExtensionDesc d;
  d.base = K;
  d.eisenstein = std::move(c);
  return build_extension(d);
}

Extension eis(const RingPtr& K, std::vector<std::int64_t> c) {
  std::vector<Elt> v;
  for (auto x : c) v.push_back(K->from_int(x));
  return eis(K, v);
}

Weierstrass minimal(const Weierstrass& w) { return tate_algorithm(w).minimal_model; }

// Ramified quadratic and cubic extensions of each test base.
std::vector<Extension> extensions_of(const RingPtr& K) {
  Elt t = K->uniformizer(), z = K->zero();
  std::vector<Extension> out;
  if (K->kind() == RingKind::mixed && K->p() == 2) {
    for (auto c : {std::vector<std::int64_t>{-2, 0}, {2, 2}, {-2, 2}, {6, 0}, {10, 4}, {-2, 0, 0}})
      out.push_back(eis(K, c));
  } else if (K->kind() == RingKind::mixed && K->p() == 3) {
    for (auto c : {std::vector<std::int64_t>{3, 0}, {-3, 0}, {3, 0, -3}, {-3, 0, 0}, {3, 3, 0}})
      out.push_back(eis(K, c));
  } else if (K->p() == 2) {
    out.push_back(eis(K, {t, t}));
    out.push_back(eis(K, {t, t * t}));
    out.push_back(eis(K, {t, t * t * t}));
    out.push_back(eis(K, {t, z, z}));
  } else {
    out.push_back(eis(K, {t, z}));
    out.push_back(eis(K, {-t, z}));
    // Artin-Schreier cubic X^3 + tX^2 - t
    out.push_back(eis(K, {-t, z, t}));
    out.push_back(eis(K, {t, t, z}));
  }
  return out;
}

}  // namespace

TEST_CASE("base change embeds coefficients") {
  auto K = zp(5, 20);
  auto w = make_curve(K, {0, 0, 0, 0, 5});
  auto triv = trivial_extension(K);
  auto wt = base_change(w, triv);
  CHECK(models_equal_mod(wt, w, 20));
  auto L = eis(K, {5, 0});
  auto wl = base_change(w, L);
  CHECK(discriminant(wl).val() == 2 * discriminant(w).val());
  CHECK_THROWS_AS(base_change(make_curve(zp(3, 5), {0, 0, 0, 0, 1}), L), DescriptorMismatch);
}

TEST_CASE("good reduction has no drop") {
  auto K = zp(2, 20);
  auto w = make_curve(K, {0, 0, 1, -1, 0});
  auto r = compare_discriminants(w, eis(K, {-2, 0}));
  CHECK(r.drop == 0);
  CHECK(r.u_val == 0);
  CHECK(base_change_conductor(w) == Rational(0));
  for (const auto& b : check_bounds(w, trivial_extension(K))) CHECK(b.pass());
}

TEST_CASE("base change of y^2 = x^3 + pi^3 and y^2 = x^3 + 1 + pi") {
  auto W4 = Ring::make_base(RingKind::mixed, ResidueField::standard(2, 2), 14);
  auto K = eis(W4, {-2, 0, 0}).ring;  // pi^3 = 2
  Elt pi = K->uniformizer();
  Weierstrass w{{K->zero(), K->zero(), K->zero(), K->zero(), pi * pi * pi}};
  auto ld = tate_algorithm(w);
  CHECK(ld.type == KodairaType::parse("I0*"));
  CHECK(ld.v_delta == 18);
  auto L = eis(K, {-pi, K->zero()});
  CHECK(L.different_valuation() == 7);
  auto r = compare_discriminants(ld.minimal_model, L);
  CHECK(r.type_L == KodairaType::parse("I0"));
  CHECK(r.drop == r.v_L_delta_K_model);
  CHECK(r.drop == 36);
  CHECK(r.bound == 96);
  CHECK(r.ok());
  for (const auto& b : check_bounds(ld.minimal_model, L)) {
    CAPTURE(b.name);
    CHECK(b.pass());
    if (b.name == "potentially good") CHECK(b.rhs == Rational(48));
  }
  CHECK(base_change_conductor(ld.minimal_model) == Rational(3, 2));
  CHECK(r.conductor_c == Rational(3, 2));
  // E_o: y^2 = x^3 + 1 + pi over L_o = K(z), z^2 + 2z - pi = 0
  Weierstrass wo{{K->zero(), K->zero(), K->zero(), K->zero(), K->one() + pi}};
  auto ldo = tate_algorithm(wo);
  CHECK(ldo.type == KodairaType::parse("II"));
  auto Lo = eis(K, {-pi, K->from_int(2)});
  CHECK(Lo.different_valuation() == 6);
  auto ro = compare_discriminants(ldo.minimal_model, Lo);
  CHECK(ro.type_L == KodairaType::parse("I0"));
  CHECK(ro.ok());
  CHECK(ro.conductor_c == base_change_conductor(ldo.minimal_model));
}

TEST_CASE("base change of y^2 + t^3 y = x^3 + t^r") {
  auto K = fpt(2, 40);
  Elt t = K->uniformizer();
  const int m = 1;
  for (int r : {1, 3}) {
    CAPTURE(r);
    Weierstrass w{{K->zero(), K->zero(), t.pow(3 * m), K->zero(), t.pow(r)}};
    auto ld = tate_algorithm(w);
    CHECK(ld.v_delta == 12 * m);
    CHECK(ld.scalings == 0);
    CHECK(ld.type == KodairaType::parse(r == 1 ? "II" : "I0*"));
    // L_1: alpha^2 + t^{3m} alpha + t; L_3: alpha = t beta, beta^2 + t^{3m-1} beta + t
    auto L = eis(K, {t, t.pow(r == 1 ? 3 * m : 3 * m - 1)});
    CHECK(L.different_valuation() == (r == 1 ? 6 * m : 6 * m - 2));
    Elt alpha = r == 1 ? L.pi() : L.embed(t) * L.pi();
    Weierstrass wl = base_change(w, L);
    Transform T{L.embed(t).pow(m), L.ring->zero(), L.ring->zero(), alpha};
    Weierstrass smooth = apply_transform(wl, T);
    Elt z = L.ring->zero(), o = L.ring->one();
    CHECK(models_equal_mod(smooth, Weierstrass{{z, z, o, z, z}}, smooth.precision()));
    auto rep = compare_discriminants(w, L);
    CHECK(rep.drop == 24 * m);
    CHECK(rep.u_val == 2 * m);
    CHECK(rep.bound == 12 * (L.different_valuation() + 1));
    CHECK(rep.ok());
    for (const auto& b : check_bounds(w, L)) {
      CAPTURE(b.name);
      CHECK(b.pass());
      if (b.name == "potentially good" && r == 1) CHECK(b.rhs == Rational(42));
    }
    CHECK(base_change_conductor(w) == Rational(m));
  }
}

TEST_CASE("base change conductor from the min formula") {
  CHECK(base_change_conductor(make_curve(zp(5, 20), {0, 0, 0, 0, 5})) == Rational(1, 6));
}

TEST_CASE("not semi-stable over L") {
  auto K = zp(5, 20);
  auto w = make_curve(K, {0, 0, 0, 0, 5});
  CHECK_THROWS_AS(check_bounds(w, eis(K, {5, 0})), NotSemiStableOverL);
}

TEST_CASE("compare-m on a corpus of base changes") {
  std::mt19937_64 rng(11);
  int count = 0;
  for (auto K : {zp(2, 24), zp(3, 16), fpt(2, 30), fpt(3, 24)}) {
    auto exts = extensions_of(K);
    for (int it = 0; it < 6; ++it) {
      auto w0 = testutil::skewed_curve(K, rng, 8);
      Weierstrass w;
      try {
        w = minimal(w0);
      } catch (const PrecisionExhausted&) {
        continue;
      }
      for (const auto& L : exts) {
        BaseChangeReport r;
        try {
          r = compare_discriminants(w, L);
        } catch (const PrecisionExhausted&) {
          continue;
        }
        CAPTURE(w.to_string());
        CAPTURE(L.ring->describe());
        CHECK(r.lower_ok());
        CHECK(r.upper_ok());
        CHECK(r.drop_consistent());
        ++count;
      }
    }
  }
  MESSAGE("base changes: " << count);
  CHECK(count >= 50);
}

TEST_CASE("twists: conductor formula and bounds") {
  std::mt19937_64 rng(12);
  int good = 0, mult = 0;
  for (auto K : {zp(2, 30), zp(3, 20), zp(5, 16), fpt(2, 36), fpt(3, 24)}) {
    for (const auto& L : extensions_of(K)) {
      if (L.e != 2) continue;
      int g = 0, mu = 0;
      for (int it = 0; it < 300 && (g < 2 || mu < 1); ++it) {
        // a curve with good or multiplicative reduction over K
        auto w0 = testutil::skewed_curve(K, rng, 6);
        LocalData ld0;
        try {
          ld0 = tate_algorithm(w0);
        } catch (const PrecisionExhausted&) {
          continue;
        }
        if (ld0.type.kind != KodairaKind::I0 && ld0.type.kind != KodairaKind::In) continue;
        if ((ld0.type.kind == KodairaKind::I0 ? g : mu) >= 2) continue;
        LocalData ld;
        std::vector<BoundCheck> bounds;
        BaseChangeReport r;
        try {
          ld = tate_algorithm(quadratic_twist(ld0.minimal_model, L));
          r = compare_discriminants(ld.minimal_model, L);
          bounds = check_bounds(ld.minimal_model, L);
        } catch (const PrecisionExhausted&) {
          continue;
        }
        CAPTURE(ld0.minimal_model.to_string());
        CAPTURE(L.ring->describe());
        CHECK(r.type_L.kind == ld0.type.kind);
        CHECK(r.conductor_c == base_change_conductor(ld.minimal_model));
        for (const auto& b : bounds) {
          CAPTURE(b.name);
          CHECK(b.pass());
        }
        (ld0.type.kind == KodairaKind::I0 ? good : mult)++;
        (ld0.type.kind == KodairaKind::I0 ? g : mu)++;
      }
    }
  }
  MESSAGE("twists: " << good << " good, " << mult << " multiplicative");
  CHECK(good >= 20);
  CHECK(mult >= 10);
}
