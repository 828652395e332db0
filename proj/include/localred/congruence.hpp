#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "localred/extension.hpp"
#include "localred/localdata.hpp"

namespace localred {

struct SearchOptions {
  // Maximum number of visited nodes; 0 reads LOCALRED_BUDGET (default 5e6).
  long long budget = 0;
};

long long search_budget(const SearchOptions& opt);

struct CongruenceWitness {
  Transform transform;  // entries known mod pi^{level+1}
  int level = 0;
};

struct ModelVerdict {
  bool congruent = false;
  int level = 0;
  std::optional<CongruenceWitness> witness;
  bool certified_exhaustive = false;
  long long nodes = 0;
};

// Extra condition on a partial transform known mod pi^k.
using TransformPredicate = std::function<bool(const Transform&, int k)>;

// Search for (u, r, s, t) mod pi^{N+1}, u a unit, with
// apply_transform(a, T) = b mod pi^{N+1}. Digits are fixed one level at a
// time: (u, s) against a1, then r against a2, then t against a3, a4, a6.
// BudgetExceeded if the search visits more than the budget.
ModelVerdict models_congruent(const Weierstrass& a, const Weierstrass& b, int N, const SearchOptions& opt = {},
                              const TransformPredicate& pred = {});

// Direct substitution check of a witness.
bool verify_witness(const Weierstrass& a, const Weierstrass& b, const CongruenceWitness& w);

// Level over O_L matching O_L / pi_K^{N+1}.
inline int level_over(const Extension& ext, int N) { return ext.e * (N + 1) - 1; }

// A Galois extension together with generators of its group.
struct GaloisData {
  Extension ext;
  std::vector<Automorphism> generators;
};

GaloisData quadratic_galois(const Extension& ext);

struct RingCongruence {
  Elt generator_image;  // image of pi_L in O_{L_o}, known mod pi_K^{N+1}
  int level = 0;
};

struct RingVerdict {
  bool congruent = false;
  int level = 0;
  std::optional<RingCongruence> witness;
  bool certified_exhaustive = false;
  long long nodes = 0;
};

// Image of x in O_L under the homomorphism pi_L -> y over O_K.
Elt map_across(const Extension& L, const Extension& Lo, const Elt& y, const Elt& x);

// Checks that pi_L -> y defines a G-equivariant isomorphism
// O_L / pi_K^{N+1} -> O_{L_o} / pi_K^{N+1}; generators are matched by index.
bool verify_ring_congruence(const GaloisData& L, const GaloisData& Lo, const Elt& y, int N);

// Both extensions must be totally ramified over the same O_K.
RingVerdict ring_congruent_equivariant(const GaloisData& L, const GaloisData& Lo, int N,
                                       const SearchOptions& opt = {});

struct DiscVerdict {
  int level = 0;
  Rational threshold;  // v_K(D_{L/K}) - 1
  bool applicable = false;
  bool ring_congruent = false;
  int e_L = 0, e_Lo = 0;
  int v_L_different = 0, v_Lo_different = 0;
  bool equal() const { return e_L == e_Lo && v_L_different == v_Lo_different; }
};

// e and v_L(D) must agree when a ring congruence exists at a level above
// the threshold; AssertionFailed otherwise.
DiscVerdict disc_invariance_check(const GaloisData& L, const GaloisData& Lo, int N, const SearchOptions& opt = {});

// Minimal model over O_L of a curve over O_K, with the action of G on it.
struct ModelOverL {
  Weierstrass model;
  Transform transform;            // base change of the input -> model
  std::vector<Transform> action;  // per generator: model -> sigma(model)
};

ModelOverL model_over(const Weierstrass& w, const GaloisData& L);
// Same with a given transform from the base change.
ModelOverL model_with(const Weierstrass& w, const GaloisData& L, const Transform& T);

// Search for a transform over O_{L_o} between the image of A under
// pi_L -> y and B, at O_L-level level_over(N), intertwining the actions.
ModelVerdict models_congruent_equivariant(const ModelOverL& A, const GaloisData& L, const ModelOverL& B,
                                          const GaloisData& Lo, const Elt& y, int N, const SearchOptions& opt = {},
                                          const std::optional<Transform>& hint = std::nullopt);

bool verify_equivariant_witness(const ModelOverL& A, const GaloisData& L, const ModelOverL& B, const GaloisData& Lo,
                                const Elt& y, int N, const Transform& phi);

struct DeterminationVerdict {
  int N = 0;
  int m = 0;
  bool ring_hypothesis = false;
  bool model_hypothesis = false;
  bool certified = false;  // a failed hypothesis was certified by exhaustion
  bool conclusion = false;
  bool hypotheses() const { return ring_hypothesis && model_hypothesis; }
};

// Checks that (Iso_m) at m = N + 12 floor(v_K(D)) + 19 forces W_{A,N} = W_{B,N}.
// ring_hint / model_hint are tried before searching. AssertionFailed if the
// hypotheses hold and the conclusion fails.
DeterminationVerdict verify_weierstrass_determination(const Weierstrass& ea, const Weierstrass& eb,
                                                      const GaloisData& L, const GaloisData& Lo, int N,
                                                      const SearchOptions& opt = {},
                                                      const std::optional<Elt>& ring_hint = std::nullopt,
                                                      const std::optional<Transform>& model_hint = std::nullopt);

// Inverse direction: for N >= v_K(Delta), W_{A,N} = W_{B,N} over the same
// O_K and L forces an equivariant congruence of the O_L-models at level N.
struct InverseVerdict {
  int N = 0;
  bool hypothesis = false;
  bool conclusion = false;
};
InverseVerdict verify_inverse_determination(const Weierstrass& ea, const Weierstrass& eb, const GaloisData& L, int N,
                                              const SearchOptions& opt = {});

struct ReportRow {
  std::string quantity;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct ExampleReport {
  std::string id;
  std::vector<ReportRow> rows;
  bool ok() const;
};

// "1.4.5" (d = 3), "2.5.8" (param = m, default 1), "sec6" (param = n, p = 5).
ExampleReport run_example(const std::string& id, int param = 0);
// As run_example; AssertionFailed on any failing row.
ExampleReport reproduce_example(const std::string& id, int param = 0);

struct Lift {
  RingPtr ring;  // W(k)[t]/(t^{n+1} - p)
  int n = 0;
  Weierstrass model;
  LocalData original, lifted;
};

// Lift of a model over F_q[[t]] to W(k)[t]/(t^{n+1} - p) with
// n = max(5, N + 2 v(Delta) - 1). AssertionFailed unless type, f, m, v(Delta)
// and minimality agree.
Lift lift_to_char_zero(const Weierstrass& w, int N);

}  // namespace localred
