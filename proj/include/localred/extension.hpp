#pragma once

#include <vector>

#include "localred/rational.hpp"
#include "localred/ring.hpp"

namespace localred {

struct ExtensionDesc {
  RingPtr base;
  int unram_degree = 1;
  // c_0 .. c_{e-1} of the monic Eisenstein polynomial (leading 1 omitted);
  // empty means no ramification.
  std::vector<Elt> eisenstein;
};

// Finite extension L/K with O_K a prefix of the tower of O_L.
struct Extension {
  RingPtr base;
  RingPtr ring;
  int base_depth = 0;
  int e = 1;
  int f = 1;
  // Depth of the unramified level added above K, or -1.
  int unram_level = -1;
  // Depth of the Eisenstein level, or -1.
  int eis_level = -1;
  std::vector<Elt> eisenstein;

  int degree() const { return e * f; }
  Elt embed(const Elt& x) const { return ring->embed_from(x); }
  Elt pi() const { return ring->uniformizer(); }
  // v_L of the different of L/K.
  int different_valuation() const;
  // v_K of the different.
  Rational different_over_base() const { return Rational(different_valuation(), e); }
  // The floor of v_K of the different.
  int different_floor() const { return floor_div(different_valuation(), e); }
};

Extension build_extension(const ExtensionDesc& d);
// Trivial extension K/K.
Extension trivial_extension(const RingPtr& K);

// Relative different valuation of the tower above depth d.
int different_valuation(const RingPtr& L, int base_depth);

// Automorphism of L over K: pi_L -> pi_image, theta -> Frob^frobenius_power(theta).
struct Automorphism {
  Elt pi_image;
  int frobenius_power = 0;
};

Automorphism identity_automorphism(const Extension& ext);
Elt apply(const Extension& ext, const Automorphism& s, const Elt& x);
// (s o t)(x) = s(t(x)).
Automorphism compose(const Extension& ext, const Automorphism& s, const Automorphism& t);
bool same_automorphism(const Extension& ext, const Automorphism& s, const Automorphism& t);
// Verifies pi_image is a root of the (twisted) Eisenstein polynomial.
void check_automorphism(const Extension& ext, const Automorphism& s);

struct GaloisGroup {
  std::vector<Automorphism> elements;  // elements[0] is the identity
  std::vector<std::vector<int>> table; // table[i][j] = index of elements[i] o elements[j]
  int order() const { return static_cast<int>(elements.size()); }
  int index_of(const Extension& ext, const Automorphism& s) const;
};

// Closure of the generators; NotAGroup if it fails to close within [L:K].
GaloisGroup generate_group(const Extension& ext, const std::vector<Automorphism>& gens);
// Checks closure, identity and inverses of an explicit element list.
GaloisGroup check_group(const Extension& ext, const std::vector<Automorphism>& elements);

// |G_0|, |G_1|, ... until trivial (lower numbering); InconsistentGroup if
// sum(|G_i| - 1) differs from the different.
std::vector<int> ramification_filtration(const Extension& ext, const GaloisGroup& g);

// Frobenius image of the unramified generator of L above K.
Elt frobenius_theta(const Extension& ext, int power);

// sigma(pi) = -c_1 - pi for a quadratic Eisenstein extension.
Automorphism quadratic_conjugation(const Extension& ext);

}  // namespace localred
