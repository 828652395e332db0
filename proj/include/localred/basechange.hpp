#pragma once

#include <string>
#include <vector>

#include "localred/extension.hpp"
#include "localred/localdata.hpp"
#include "localred/rational.hpp"

namespace localred {

// The same equation over O_L.
Weierstrass base_change(const Weierstrass& w, const Extension& ext);

struct BaseChangeReport {
  int e = 1;
  int v_L_different = 0;
  int v_L_delta_K_model = 0;
  int v_L_delta_L_minimal = 0;
  int drop = 0;
  int bound = 0;  // 12 (v_L(D) + e - 1)
  int u_val = 0;  // v_L(u) of the minimizing transform over O_L
  Rational conductor_c;  // u_val / e
  KodairaType type_L;

  bool lower_ok() const { return drop >= 0; }
  bool upper_ok() const { return drop <= bound; }
  bool drop_consistent() const { return drop == 12 * u_val; }
  bool ok() const { return lower_ok() && upper_ok() && drop_consistent(); }
};

BaseChangeReport compare_discriminants(const Weierstrass& w_min, const Extension& ext);

// min{v(Delta)/12, v(c4)/4} of a minimal model (c4 = 0 counts as infinite).
Rational base_change_conductor(const Weierstrass& w_min);

struct BoundCheck {
  std::string name;
  Rational lhs, rhs;
  bool strict = false;  // lhs < rhs instead of lhs <= rhs
  bool pass() const { return strict ? lhs < rhs : lhs <= rhs; }
};

// Bounds that hold when E_L is semi-stable; NotSemiStableOverL otherwise.
std::vector<BoundCheck> check_bounds(const Weierstrass& w_min, const Extension& ext);

// Integral model over O_K of the quadratic twist of E trivialized by a
// ramified quadratic L.
Weierstrass quadratic_twist(const Weierstrass& w, const Extension& ext);

}  // namespace localred
