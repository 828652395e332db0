#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "localred/residue_field.hpp"

namespace localred {

using u64 = std::uint64_t;

enum class RingKind { mixed, equal };

struct Valuation {
  enum class State { finite, undetermined, infinite };
  State state = State::infinite;
  // finite: the valuation; undetermined: the known lower bound.
  int value = 0;

  bool finite() const { return state == State::finite; }
  bool undetermined() const { return state == State::undetermined; }
  bool infinite() const { return state == State::infinite; }
  std::string to_string() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Element of a truncated DVR O/pi^cap, known modulo pi^precision.
class Elt {
 public:
  Elt() = default;
  Elt(RingPtr ring, std::vector<u64> coeffs, int precision);

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }
  int precision() const { return prec_; }
  bool is_exact_zero() const { return exact_zero_; }
  const std::vector<u64>& coeffs() const { return c_; }

  Valuation valuation() const;
  // Valuation if determined, otherwise the precision (a lower bound).
  int val_lb() const;
  // Determined valuation; throws PrecisionExhausted otherwise.
  int val() const;
  // v(x) >= k; throws PrecisionExhausted if undecidable.
  bool val_at_least(int k) const;
  bool is_unit() const;
  // Zero modulo pi^k (k <= precision required).
  bool is_zero_mod(int k) const;

  Elt operator-() const;
  Elt& operator+=(const Elt& o);
  Elt& operator-=(const Elt& o);
  Elt& operator*=(const Elt& o);
  friend Elt operator+(Elt a, const Elt& b) { return a += b; }
  friend Elt operator-(Elt a, const Elt& b) { return a -= b; }
  friend Elt operator*(Elt a, const Elt& b) { return a *= b; }

  Elt pow(unsigned e) const;
  Elt inv_unit() const;
  // x / pi^k; requires v(x) >= k.
  Elt div_pi(int k) const;
  Elt mul_pi(int k) const;
  // x / y for v(x) >= v(y); NonIntegralResult otherwise.
  Elt div(const Elt& y) const;
  Elt truncate(int precision) const;
  FieldElt residue() const;
  // Canonical pi-adic digits d_0 .. d_{precision-1}.
  std::vector<FieldElt> digits() const;

  // Equality modulo pi^k; both must be known to at least k.
  bool equals_mod(const Elt& o, int k) const;
  // Equality modulo the common precision.
  bool operator==(const Elt& o) const;
  bool operator!=(const Elt& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  friend class Ring;
  RingPtr ring_;
  std::vector<u64> c_;
  int prec_ = 0;
  bool exact_zero_ = false;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  struct Level {
    enum class Kind { unramified, eisenstein };
    Kind kind = Kind::eisenstein;
    int degree = 1;
    // Coefficients P_0 .. P_{d-1} of the monic defining polynomial, each a
    // flat element of the parent level.
    std::vector<u64> poly;
    std::vector<bool> poly_zero;
    // Eisenstein levels: pi_parent / X as a flat element of this level.
    std::vector<u64> q;
  };

  // W(F_q)/p^A (mixed) or F_q[[t]]/t^A (equal).
  static RingPtr make_base(RingKind kind, const ResidueField& k, int precision);
  // O[X]/(X^d + c_{d-1} X^{d-1} + ... + c_0); coeffs c_0..c_{d-1} over *this.
  RingPtr adjoin_eisenstein(const std::vector<Elt>& coeffs) const;

  RingKind kind() const { return kind_; }
  u64 p() const { return p_; }
  int base_precision() const { return a_; }
  int cap() const { return cap_.back(); }
  int cap_at(int depth) const { return cap_[depth]; }
  int depth() const { return static_cast<int>(levels_.size()); }
  const Level& level(int k) const { return levels_[k - 1]; }
  RingPtr parent() const { return parent_; }
  RingPtr prefix(int depth) const;
  int abs_ramification() const { return e_.back(); }
  int ramification_at(int depth) const { return e_[depth]; }
  int residue_degree() const { return k_.degree(); }
  const ResidueField& residue_field() const { return k_; }
  std::size_t size() const { return size_.back(); }
  std::size_t size_at(int depth) const { return size_[depth]; }
  bool has_unramified_level() const { return !levels_.empty() && levels_[0].kind == Level::Kind::unramified; }
  // Index of the first level above the unramified part.
  int unramified_depth() const { return has_unramified_level() ? 1 : 0; }

  Elt zero() const;
  Elt one() const;
  Elt from_int(std::int64_t n) const;
  Elt uniformizer() const;
  // Generator of level k (1 <= k <= depth) as an element of *this.
  Elt generator(int k) const;
  Elt lift(FieldElt a) const;
  Elt make(std::vector<u64> coeffs, int precision) const;

  // Elements of prefix(depth) in and out of *this.
  Elt embed_from(const Elt& x) const;
  // O_{prefix(depth)}-coordinates of x with respect to the monomial basis
  // of the levels above depth.
  std::vector<Elt> coordinates_over(int depth, const Elt& x) const;
  Elt from_coordinates(int depth, const std::vector<Elt>& coords) const;
  // Evaluate the ring homomorphism fixing prefix(fixed_depth) and sending the
  // generator of level k (k > fixed_depth) to images[k - fixed_depth - 1].
  Elt evaluate_hom(const Elt& x, int fixed_depth, const std::vector<Elt>& images) const;

  bool same_as(const Ring& o) const;
  std::string describe() const;

  // Flat kernels at a given depth.
  void mul_flat(int k, const u64* a, const u64* b, u64* out) const;
  void add_flat(int k, const u64* a, const u64* b, u64* out) const;
  void sub_flat(int k, const u64* a, const u64* b, u64* out) const;
  int val_flat(int k, const u64* a) const;
  void trunc_flat(int k, u64* a, int prec) const;
  void divpi_flat(int k, const u64* a, u64* out) const;
  bool zero_flat(int k, const u64* a) const;

 private:
  Ring() = default;
  u64 addm(u64 a, u64 b) const { u64 s = a + b; return s >= mod_ ? s - mod_ : s; }
  u64 subm(u64 a, u64 b) const { return a >= b ? a - b : a + mod_ - b; }
  u64 mulm(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod_);
  }

  RingKind kind_ = RingKind::mixed;
  u64 p_ = 0;
  int a_ = 0;
  u64 mod_ = 0;  // p^A (mixed) or p (equal)
  std::vector<u64> ppow_;  // mixed: p^0 .. p^A
  ResidueField k_;
  std::vector<Level> levels_;
  std::vector<std::size_t> size_;
  std::vector<int> e_;
  std::vector<int> cap_;
  RingPtr parent_;
};

// Hensel/Newton refinement of a simple root of f (coefficients low to high)
// starting from x0 with f(x0) = 0 mod pi and f'(x0) a unit.
Elt hensel_root(const std::vector<Elt>& f, const Elt& x0);
Elt eval_poly(const std::vector<Elt>& f, const Elt& x);

}  // namespace localred
