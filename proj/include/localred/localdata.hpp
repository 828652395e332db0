#pragma once

#include <string>

#include "localred/weierstrass.hpp"

namespace localred {

enum class KodairaKind { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };

struct KodairaType {
  KodairaKind kind = KodairaKind::I0;
  int n = 0;  // for In and In*

  std::string to_string() const;
  static KodairaType parse(const std::string& s);
  bool additive() const;
  bool operator==(const KodairaType& o) const { return kind == o.kind && n == o.n; }
  bool operator!=(const KodairaType& o) const { return !(*this == o); }
};

// Geometric number of irreducible components of the special fibre.
int component_count(const KodairaType& t);
// Conductor exponent for residue characteristic >= 5.
int tame_conductor_exponent(const KodairaType& t);

struct LocalData {
  Weierstrass minimal_model;
  Transform transform;  // input -> minimal model
  KodairaType type;
  int f = 0;
  int m = 1;
  int v_delta = 0;        // of the minimal model
  int v_delta_input = 0;  // of the input model
  int scalings = 0;       // v(u) of the minimizing transform
};

LocalData tate_algorithm(const Weierstrass& w);
bool is_minimal(const Weierstrass& w);

struct BlowupCount {
  int value = 0;
  bool exact = true;  // false: value is an upper bound
};

// Number t of blow-ups turning the minimal Weierstrass model into a
// regular one. Types II*, III*, In* only have bounds unless
// experimental_exact is set, which counts along the resolution of the
// rational double point on the Weierstrass model.
BlowupCount blowup_count(const KodairaType& type, int v_delta, bool experimental_exact = false);

struct DeterminationLevels {
  int weierstrass_offset = 0;        // W_{N + offset} determines W_N
  int regular_from_weierstrass = 0;  // W_{N + 2t + 1} determines X_N
  int regular_total = 0;             // W_{N + total} determines X_N
};

DeterminationLevels determination_levels(int vd_floor, int v_delta, int t);

}  // namespace localred
