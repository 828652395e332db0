#include "localred/extension.hpp"

#include "localred/errors.hpp"

namespace localred {

Extension build_extension(const ExtensionDesc& d) {
  if (!d.base) throw InvalidDescriptor("extension without a base ring");
  if (d.unram_degree < 1) throw InvalidDescriptor("unramified degree must be positive");
  Extension ext;
  ext.base = d.base;
  ext.base_depth = d.base->depth();
  RingPtr cur = d.base;
  if (d.unram_degree > 1) {
    if (d.base->depth() != 0)
      throw NotSupported("unramified steps above a non-prime base ring");
    auto k = ResidueField::standard(static_cast<std::uint32_t>(d.base->p()), d.unram_degree);
    cur = Ring::make_base(d.base->kind(), k, d.base->base_precision());
    ext.unram_level = 1;
    ext.f = d.unram_degree;
  }
  if (!d.eisenstein.empty()) {
    std::vector<Elt> coeffs;
    for (const auto& c : d.eisenstein) {
      if (c.ring()->same_as(*cur))
        coeffs.push_back(c);
      else
        coeffs.push_back(cur->embed_from(c));
    }
    if (coeffs.size() == 1) {
      if (!(coeffs[0].valuation().finite() && coeffs[0].val() == 1))
        throw NotEisenstein("linear polynomial constant term must be a uniformizer");
    } else {
      cur = cur->adjoin_eisenstein(coeffs);
      ext.eis_level = cur->depth();
      ext.e = static_cast<int>(coeffs.size());
    }
    ext.eisenstein = coeffs;
  }
  ext.ring = cur;
  return ext;
}

Extension trivial_extension(const RingPtr& K) {
  ExtensionDesc d;
  d.base = K;
  return build_extension(d);
}

int different_valuation(const RingPtr& L, int base_depth) {
  int total = 0;
  for (int k = base_depth + 1; k <= L->depth(); ++k) {
    const auto& lv = L->level(k);
    if (lv.kind == Ring::Level::Kind::unramified) continue;
    RingPtr Rk = L->prefix(k);
    RingPtr Rp = L->prefix(k - 1);
    const int deg = lv.degree;
    const std::size_t n = Rp->size();
    Elt x = Rk->generator(k);
    Elt deriv = Rk->from_int(deg) * x.pow(static_cast<unsigned>(deg - 1));
    for (int j = 1; j < deg; ++j) {
      std::vector<u64> c(lv.poly.begin() + j * n, lv.poly.begin() + (j + 1) * n);
      Elt cj = Rk->embed_from(Rp->make(c, Rp->cap()));
      deriv += Rk->from_int(j) * cj * x.pow(static_cast<unsigned>(j - 1));
    }
    Valuation v = deriv.valuation();
    if (!v.finite()) throw InvalidDescriptor("inseparable Eisenstein polynomial (derivative vanishes)");
    total += v.value * (L->abs_ramification() / L->ramification_at(k));
  }
  return total;
}

int Extension::different_valuation() const { return localred::different_valuation(ring, base_depth); }

Elt frobenius_theta(const Extension& ext, int power) {
  if (ext.unram_level < 0) throw InvalidDescriptor("no unramified level above the base");
  power = ((power % ext.f) + ext.f) % ext.f;
  RingPtr R1 = ext.ring->prefix(ext.unram_level);
  Elt theta = R1->generator(ext.unram_level);
  if (power == 0) return ext.ring->embed_from(theta);
  const auto& lv = R1->level(ext.unram_level);
  RingPtr R0 = R1->prefix(ext.unram_level - 1);
  const std::size_t n = R0->size();
  std::vector<Elt> h;
  for (int j = 0; j < lv.degree; ++j) {
    std::vector<u64> c(lv.poly.begin() + j * n, lv.poly.begin() + (j + 1) * n);
    h.push_back(R1->embed_from(R0->make(c, R0->cap())));
  }
  h.push_back(R1->one());
  Elt x0 = theta;
  for (int i = 0; i < power; ++i) x0 = x0.pow(static_cast<unsigned>(R1->p()));
  return ext.ring->embed_from(hensel_root(h, x0));
}

Automorphism identity_automorphism(const Extension& ext) { return {ext.ring->uniformizer(), 0}; }

Elt apply(const Extension& ext, const Automorphism& s, const Elt& x) {
  std::vector<Elt> images;
  for (int k = ext.base_depth + 1; k <= ext.ring->depth(); ++k) {
    if (k == ext.unram_level)
      images.push_back(frobenius_theta(ext, s.frobenius_power));
    else
      images.push_back(s.pi_image);
  }
  return ext.ring->evaluate_hom(x, ext.base_depth, images);
}

Automorphism compose(const Extension& ext, const Automorphism& s, const Automorphism& t) {
  Automorphism r;
  r.pi_image = ext.eis_level >= 0 ? apply(ext, s, t.pi_image) : ext.ring->uniformizer();
  r.frobenius_power = (s.frobenius_power + t.frobenius_power) % ext.f;
  return r;
}

bool same_automorphism(const Extension& ext, const Automorphism& s, const Automorphism& t) {
  if (((s.frobenius_power - t.frobenius_power) % ext.f) != 0) return false;
  if (ext.eis_level < 0) return true;
  return s.pi_image == t.pi_image;
}

void check_automorphism(const Extension& ext, const Automorphism& s) {
  if (!s.pi_image.ring()->same_as(*ext.ring)) throw DescriptorMismatch("automorphism over a different ring");
  if (ext.eis_level < 0) return;
  Valuation v = s.pi_image.valuation();
  if (!(v.finite() && v.value == 1)) throw NotAGroup("image of the uniformizer is not a uniformizer");
  Elt acc = s.pi_image.pow(static_cast<unsigned>(ext.e));
  for (int j = 0; j < ext.e; ++j) {
    Elt c = apply(ext, s, ext.ring->embed_from(ext.eisenstein[j]));
    acc += c * s.pi_image.pow(static_cast<unsigned>(j));
  }
  if (!(acc.valuation().undetermined() || acc.valuation().infinite()))
    throw NotAGroup("image of the uniformizer is not a root of the Eisenstein polynomial");
}

int GaloisGroup::index_of(const Extension& ext, const Automorphism& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (same_automorphism(ext, elements[i], s)) return static_cast<int>(i);
  return -1;
}

GaloisGroup check_group(const Extension& ext, const std::vector<Automorphism>& elements) {
  if (elements.empty()) throw NotAGroup("empty element list");
  GaloisGroup g;
  Automorphism id = identity_automorphism(ext);
  g.elements.push_back(id);
  bool have_id = false;
  for (const auto& s : elements) {
    check_automorphism(ext, s);
    if (same_automorphism(ext, s, id)) {
      if (have_id) throw NotAGroup("identity listed twice");
      have_id = true;
      continue;
    }
    if (g.index_of(ext, s) >= 0) throw NotAGroup("repeated element");
    g.elements.push_back(s);
  }
  if (!have_id) throw NotAGroup("identity missing");
  const int n = g.order();
  g.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < n; ++j) {
      int k = g.index_of(ext, compose(ext, g.elements[i], g.elements[j]));
      if (k < 0) throw NotAGroup("not closed under composition");
      g.table[i][j] = k;
      if (k == 0) has_inverse = true;
    }
    if (!has_inverse) throw NotAGroup("element without inverse");
  }
  return g;
}

GaloisGroup generate_group(const Extension& ext, const std::vector<Automorphism>& gens) {
  std::vector<Automorphism> elems{identity_automorphism(ext)};
  GaloisGroup tmp;
  tmp.elements = elems;
  for (std::size_t i = 0; i < tmp.elements.size(); ++i) {
    for (const auto& g : gens) {
      Automorphism c = compose(ext, g, tmp.elements[i]);
      if (tmp.index_of(ext, c) < 0) {
        tmp.elements.push_back(c);
        if (tmp.order() > ext.degree()) throw NotAGroup("closure exceeds the extension degree");
      }
    }
  }
  return check_group(ext, tmp.elements);
}

std::vector<int> ramification_filtration(const Extension& ext, const GaloisGroup& g) {
  if (g.order() != ext.degree()) throw InconsistentGroup("group order differs from the degree");
  std::vector<int> ivals;  // i_G(s) for nontrivial inertia elements
  int inertia = 1;
  for (int i = 1; i < g.order(); ++i) {
    const auto& s = g.elements[i];
    if (s.frobenius_power % ext.f != 0) continue;
    ++inertia;
    Valuation v = (s.pi_image - ext.ring->uniformizer()).valuation();
    if (!v.finite()) throw PrecisionExhausted("ramification break beyond precision");
    ivals.push_back(v.value);
  }
  std::vector<int> sizes{inertia};
  for (int i = 1;; ++i) {
    int cnt = 1;
    for (int v : ivals)
      if (v >= i + 1) ++cnt;
    if (sizes.back() == 1) break;
    sizes.push_back(cnt);
  }
  int sum = 0;
  for (int s : sizes) sum += s - 1;
  if (sum != ext.different_valuation())
    throw InconsistentGroup("sum of |G_i|-1 is " + std::to_string(sum) + ", different is " +
                            std::to_string(ext.different_valuation()));
  return sizes;
}

Automorphism quadratic_conjugation(const Extension& ext) {
  if (ext.e != 2 || ext.f != 1) throw InvalidDescriptor("not a ramified quadratic extension");
  Elt c1 = ext.ring->embed_from(ext.eisenstein[1]);
  return {-c1 - ext.ring->uniformizer(), 0};
}

}  // namespace localred
