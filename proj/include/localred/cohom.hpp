#pragma once

#include <vector>

#include "localred/extension.hpp"

namespace localred {

using Vec = std::vector<Elt>;
using Mat = std::vector<Vec>;  // row-major

// Smith form of A over O_K / pi^level: U * A * V = diag(pi^a_0, ...) there.
// Entries are full-precision representatives of classes mod pi^level.
struct SmithForm {
  int level = 0;
  int rank = 0;            // number of pivots with a_i < level
  std::vector<int> diag;   // a_0 <= a_1 <= ... for i < rank
  Mat U, V, Vinv;
};

SmithForm smith_form(const Mat& A, int level);
Vec mat_vec(const Mat& A, const Vec& x);
Mat mat_mul(const Mat& A, const Mat& B);

// Finitely generated O_K-submodule of (O_K / pi^level)^dim, given by
// generators, with its elementary divisors.
struct FiniteModule {
  int dim = 0;
  int level = 0;
  std::vector<Vec> generators;
  std::vector<int> divisors;  // module = sum of O_K / pi^c

  int exponent() const;
  int length() const;
  bool contains(const Vec& x) const;
  bool contains(const FiniteModule& o) const;
};

FiniteModule span(const RingPtr& K, int dim, const std::vector<Vec>& gens, int level);

// Free O_L-module of rank n; generator g acts by g(x) = action[g] * g(x_i)_i.
struct SemiLinearModule {
  Extension ext;
  int rank = 1;
  std::vector<Automorphism> generators;
  std::vector<Mat> action;  // n x n over O_L, one per generator

  // Dimension over O_K.
  int dim() const { return rank * ext.degree(); }
};

// O_L with its natural action.
SemiLinearModule natural_module(const Extension& ext, const std::vector<Automorphism>& gens);
// O_L[G] with sigma(l tau) = sigma(l) (sigma tau); all of G acts.
SemiLinearModule regular_module(const Extension& ext, const GaloisGroup& g);

// Matrix of generator i on O_K-coordinates (index k * [L:K] + j for
// omega_j e_k).
Mat galois_matrix(const SemiLinearModule& M, int i);
// O_K-coordinates of an element of M given by its O_L-components, and back.
Vec to_coordinates(const SemiLinearModule& M, const std::vector<Elt>& x);
std::vector<Elt> from_coordinates(const SemiLinearModule& M, const Vec& c);

// Checks A_{gh} = A_g g(A_h) along the group table; InconsistentGroup if not.
void check_cocycle(const SemiLinearModule& M, const GaloisGroup& g);

// (M_N)^G inside M_N = M / pi_K^{N+1} M.
FiniteModule invariants_at_level(const SemiLinearModule& M, int N);

// O_K-basis of M^G, with the number of digits to which it is known.
struct FreeSubmodule {
  std::vector<Vec> basis;
  int precision = 0;
};
FreeSubmodule invariants(const SemiLinearModule& M);

// H^1 of the cyclic group generated by generator `gen` of order `order`.
struct H1Result {
  std::vector<int> divisors;
  int exponent() const;
  int length() const;
};
H1Result h1_cyclic(const SemiLinearModule& M, int gen, int order);
int h1_cyclic_exponent(const SemiLinearModule& M, int gen, int order);

// Smallest j with pi_L^j M contained in O_L M^G.
int annihilation_exponent(const SemiLinearModule& M);
// b M contained in O_L M^G.
bool annihilated_by(const SemiLinearModule& M, const Elt& b);
// D_{L/K} M contained in O_L M^G.
bool check_different_annihilation(const SemiLinearModule& M);

struct TruncationCheck {
  bool invariants_in_image = false;  // Im f_N in Im f_{m,N}
  bool image_in_invariants = false;  // Im f_{m,N} in Im f_N
  bool equal() const { return invariants_in_image && image_in_invariants; }
};
TruncationCheck check_invariants_truncation(const SemiLinearModule& M, int N, int m);

}  // namespace localred
