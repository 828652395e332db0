#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace localred {

// Element of F_q encoded as an index: coefficient list (c0, ..., c_{s-1}) of
// the polynomial basis read as a base-p number with c0 most significant, so
// numeric order is lexicographic order on coefficient lists.
using FieldElt = std::uint32_t;

class ResidueField {
 public:
  ResidueField() = default;
  // F_p[x]/(g); g monic of degree s, given low to high with leading 1.
  ResidueField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  // F_{p^s} with the lexicographically first irreducible modulus.
  static ResidueField standard(std::uint32_t p, int s);

  std::uint32_t p() const { return p_; }
  int degree() const { return s_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElt zero() const { return 0; }
  FieldElt one() const { return encode_one_; }
  FieldElt from_int(std::int64_t n) const;

  std::vector<std::uint32_t> coeffs(FieldElt a) const;
  FieldElt from_coeffs(const std::vector<std::uint32_t>& c) const;

  FieldElt add(FieldElt a, FieldElt b) const;
  FieldElt sub(FieldElt a, FieldElt b) const;
  FieldElt neg(FieldElt a) const;
  FieldElt mul(FieldElt a, FieldElt b) const;
  FieldElt inv(FieldElt a) const;
  FieldElt pow(FieldElt a, std::uint64_t e) const;
  // Inverse of absolute Frobenius: the unique b with b^p = a.
  FieldElt pth_root(FieldElt a) const;

  // Evaluates a polynomial given low to high.
  FieldElt eval(const std::vector<FieldElt>& poly, FieldElt x) const;
  // All roots in F_q, in index order.
  std::vector<FieldElt> roots(const std::vector<FieldElt>& poly) const;

  bool operator==(const ResidueField& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }
  std::string to_string(FieldElt a) const;

 private:
  std::uint32_t p_ = 0;
  int s_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElt encode_one_ = 0;
  std::vector<FieldElt> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<FieldElt> add_;  // only for q <= 256
};

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& g);

}  // namespace localred
