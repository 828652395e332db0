#include "localred/residue_field.hpp"

#include <sstream>

#include "localred/errors.hpp"

namespace localred {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), g, p);
}

}  // namespace

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& g) {
  if (g.size() < 2 || g.back() != 1) return false;
  const int s = static_cast<int>(g.size()) - 1;
  for (int d = 1; 2 * d <= s; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f(d + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      if (poly_mod(g, f, p).empty()) return false;
    }
  }
  return true;
}

ResidueField::ResidueField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p < 2) throw InvalidDescriptor("residue characteristic must be prime");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidDescriptor("residue characteristic must be prime");
  for (auto& c : modulus_) c %= p;
  if (!is_irreducible_mod_p(p, modulus_))
    throw InvalidDescriptor("residue modulus is not monic irreducible");
  s_ = static_cast<int>(modulus_.size()) - 1;
  std::uint64_t q = 1;
  for (int i = 0; i < s_; ++i) {
    q *= p;
    if (q > (1u << 20)) throw NotSupported("residue field larger than 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  encode_one_ = from_coeffs({1});

  // Find a primitive element and tabulate discrete logarithms.
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (FieldElt cand = 1; cand < q_; ++cand) {
    Poly g = coeffs(cand);
    trim(g);
    Poly cur{1};
    std::uint32_t order = 0;
    bool ok = true;
    std::vector<char> seen(q_, 0);
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      FieldElt e = from_coeffs(cur);
      if (seen[e]) {
        ok = false;
        break;
      }
      seen[e] = 1;
      exp_[k] = e;
      cur = poly_mulmod(cur, g, modulus_, p_);
      ++order;
    }
    if (ok && order == q_ - 1) break;
    if (cand + 1 == q_) throw InvalidDescriptor("no primitive element found");
  }
  for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;
  if (q_ <= 256) {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (FieldElt a = 0; a < q_; ++a) {
      auto ca = coeffs(a);
      for (FieldElt b = 0; b < q_; ++b) {
        auto cb = coeffs(b);
        for (int i = 0; i < s_; ++i) cb[i] = (ca[i] + cb[i]) % p_;
        add_[static_cast<std::size_t>(a) * q_ + b] = from_coeffs(cb);
      }
    }
  }
}

ResidueField ResidueField::standard(std::uint32_t p, int s) {
  if (s < 1) throw InvalidDescriptor("residue degree must be positive");
  if (s == 1) return ResidueField(p, {0, 1});
  std::uint64_t count = 1;
  for (int i = 0; i < s; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly g(s + 1, 0);
    std::uint64_t v = idx;
    for (int i = 0; i < s; ++i) {
      g[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    g[s] = 1;
    if (g[0] != 0 && is_irreducible_mod_p(p, g)) return ResidueField(p, g);
  }
  throw InvalidDescriptor("no irreducible polynomial found");
}

FieldElt ResidueField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return from_coeffs({static_cast<std::uint32_t>(r)});
}

std::vector<std::uint32_t> ResidueField::coeffs(FieldElt a) const {
  std::vector<std::uint32_t> c(s_, 0);
  for (int i = s_ - 1; i >= 0; --i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FieldElt ResidueField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint64_t v = 0;
  for (int i = 0; i < s_; ++i) {
    std::uint32_t ci = i < static_cast<int>(c.size()) ? c[i] % p_ : 0;
    v = v * p_ + ci;
  }
  return static_cast<FieldElt>(v);
}

FieldElt ResidueField::add(FieldElt a, FieldElt b) const {
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
  auto ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < s_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(ca);
}

FieldElt ResidueField::neg(FieldElt a) const {
  auto ca = coeffs(a);
  for (auto& c : ca) c = (p_ - c) % p_;
  return from_coeffs(ca);
}

FieldElt ResidueField::sub(FieldElt a, FieldElt b) const { return add(a, neg(b)); }

FieldElt ResidueField::mul(FieldElt a, FieldElt b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = (log_[a] + log_[b]) % (q_ - 1);
  return exp_[k];
}

FieldElt ResidueField::inv(FieldElt a) const {
  if (a == 0) throw NonUnit("zero has no inverse in the residue field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElt ResidueField::pow(FieldElt a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a == 0) return 0;
  std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

FieldElt ResidueField::pth_root(FieldElt a) const {
  return pow(a, static_cast<std::uint64_t>(q_ / p_));
}

FieldElt ResidueField::eval(const std::vector<FieldElt>& poly, FieldElt x) const {
  FieldElt acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

std::vector<FieldElt> ResidueField::roots(const std::vector<FieldElt>& poly) const {
  std::vector<FieldElt> out;
  for (FieldElt x = 0; x < q_; ++x)
    if (eval(poly, x) == 0) out.push_back(x);
  return out;
}

std::string ResidueField::to_string(FieldElt a) const {
  if (s_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  auto c = coeffs(a);
  for (int i = 0; i < s_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

}  // namespace localred
