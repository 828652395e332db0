#include "localred/ring.hpp"

#include <algorithm>
#include <sstream>

#include "localred/errors.hpp"

namespace localred {

std::string Valuation::to_string() const {
  switch (state) {
    case State::finite:
      return std::to_string(value);
    case State::undetermined:
      return ">=" + std::to_string(value);
    case State::infinite:
      return "inf";
  }
  return "?";
}

// ---------------------------------------------------------------- Ring

RingPtr Ring::make_base(RingKind kind, const ResidueField& k, int precision) {
  if (precision < 1) throw InvalidDescriptor("precision must be at least 1");
  auto base = std::shared_ptr<Ring>(new Ring());
  base->kind_ = kind;
  base->p_ = k.p();
  base->a_ = precision;
  base->k_ = ResidueField::standard(k.p(), 1);
  if (kind == RingKind::mixed) {
    base->ppow_.assign(1, 1);
    unsigned __int128 m = 1;
    for (int i = 0; i < precision; ++i) {
      m *= k.p();
      if (m > (static_cast<unsigned __int128>(1) << 62))
        throw PrecisionExhausted("p^A exceeds 2^62; lower the precision");
      base->ppow_.push_back(static_cast<u64>(m));
    }
    base->mod_ = static_cast<u64>(m);
    base->size_ = {1};
  } else {
    base->mod_ = k.p();
    base->size_ = {static_cast<std::size_t>(precision)};
  }
  base->e_ = {1};
  base->cap_ = {precision};
  if (k.degree() == 1) return base;

  auto r = std::shared_ptr<Ring>(new Ring(*base));
  r->parent_ = base;
  r->k_ = k;
  Level lv;
  lv.kind = Level::Kind::unramified;
  lv.degree = k.degree();
  const std::size_t n = base->size_[0];
  lv.poly.assign(n * lv.degree, 0);
  lv.poly_zero.assign(lv.degree, true);
  for (int j = 0; j < lv.degree; ++j) {
    u64 c = k.modulus()[j];
    lv.poly[j * n] = c;
    lv.poly_zero[j] = (c == 0);
  }
  r->levels_.push_back(lv);
  r->size_.push_back(n * lv.degree);
  r->e_.push_back(1);
  r->cap_.push_back(precision);
  return r;
}

RingPtr Ring::adjoin_eisenstein(const std::vector<Elt>& coeffs) const {
  if (coeffs.empty()) throw NotEisenstein("empty polynomial");
  const int d = static_cast<int>(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.ring() || !c.ring()->same_as(*this))
      throw DescriptorMismatch("Eisenstein coefficient over a different ring");
    if (c.precision() < cap())
      throw PrecisionExhausted("Eisenstein coefficients must be known to full precision");
  }
  if (coeffs[0].val_lb() != 1 || !coeffs[0].valuation().finite())
    throw NotEisenstein("constant term must have valuation exactly 1");
  for (int j = 1; j < d; ++j)
    if (!coeffs[j].val_at_least(1))
      throw NotEisenstein("non-leading coefficient is a unit");

  auto r = std::shared_ptr<Ring>(new Ring(*this));
  r->parent_ = shared_from_this();
  const std::size_t n = size();
  Level lv;
  lv.kind = Level::Kind::eisenstein;
  lv.degree = d;
  lv.poly.assign(n * d, 0);
  lv.poly_zero.assign(d, true);
  for (int j = 0; j < d; ++j) {
    std::copy(coeffs[j].coeffs().begin(), coeffs[j].coeffs().end(), lv.poly.begin() + j * n);
    lv.poly_zero[j] = zero_flat(depth(), coeffs[j].coeffs().data());
  }
  // pi_parent / X = -w^{-1} (X^{d-1} + c_{d-1} X^{d-2} + ... + c_1), w = c_0 / pi_parent.
  std::vector<u64> wflat(n);
  divpi_flat(depth(), coeffs[0].coeffs().data(), wflat.data());
  Elt w = make(wflat, cap());
  Elt winv = -w.inv_unit();
  lv.q.assign(n * d, 0);
  for (int j = 0; j < d; ++j) {
    Elt qj = (j + 1 < d) ? winv * coeffs[j + 1] : winv;
    std::copy(qj.coeffs().begin(), qj.coeffs().end(), lv.q.begin() + j * n);
  }
  r->levels_.push_back(lv);
  r->size_.push_back(n * d);
  r->e_.push_back(e_.back() * d);
  r->cap_.push_back(cap_.back() * d);
  return r;
}

RingPtr Ring::prefix(int depth) const {
  if (depth < 0 || depth > this->depth()) throw InvalidDescriptor("prefix depth out of range");
  RingPtr cur = shared_from_this();
  while (cur->depth() > depth) cur = cur->parent();
  return cur;
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || p_ != o.p_ || a_ != o.a_ || levels_.size() != o.levels_.size())
    return false;
  if (!(k_ == o.k_)) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& x = levels_[i];
    const auto& y = o.levels_[i];
    if (x.kind != y.kind || x.degree != y.degree || x.poly != y.poly) return false;
  }
  return true;
}

std::string Ring::describe() const {
  std::ostringstream os;
  if (kind_ == RingKind::mixed)
    os << "Z_" << p_;
  else
    os << "F_" << p_ << "[[t]]";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    os << (lv.kind == Level::Kind::unramified ? "[unr" : "[eis") << lv.degree << "]";
  }
  os << " mod pi^" << cap();
  return os.str();
}

Elt Ring::make(std::vector<u64> coeffs, int precision) const {
  if (coeffs.size() != size()) throw DescriptorMismatch("coefficient vector has wrong size");
  return Elt(shared_from_this(), std::move(coeffs), precision);
}

Elt Ring::zero() const {
  Elt z(shared_from_this(), std::vector<u64>(size(), 0), cap());
  z.exact_zero_ = true;
  return z;
}

Elt Ring::one() const { return from_int(1); }

Elt Ring::from_int(std::int64_t n) const {
  if (n == 0) return zero();
  std::vector<u64> c(size(), 0);
  __int128 m = static_cast<__int128>(mod_);
  __int128 r = static_cast<__int128>(n) % m;
  if (r < 0) r += m;
  c[0] = static_cast<u64>(r);
  return Elt(shared_from_this(), std::move(c), cap());
}

Elt Ring::generator(int k) const {
  if (k < 1 || k > depth()) throw InvalidDescriptor("generator level out of range");
  const Level& lv = level(k);
  const std::size_t n = size_[k - 1];
  std::vector<u64> c(size(), 0);
  if (lv.degree == 1) {
    for (std::size_t i = 0; i < n; ++i) c[i] = lv.poly[i] == 0 ? 0 : mod_ - lv.poly[i];
  } else {
    // slice 1 of level k holds the parent's one
    c[n] = 1;
  }
  return Elt(shared_from_this(), std::move(c), cap());
}

Elt Ring::uniformizer() const {
  for (int k = depth(); k >= 1; --k)
    if (level(k).kind == Level::Kind::eisenstein) return generator(k);
  if (kind_ == RingKind::mixed) return from_int(static_cast<std::int64_t>(p_));
  std::vector<u64> c(size(), 0);
  if (a_ > 1) c[1] = 1;
  return Elt(shared_from_this(), std::move(c), cap());
}

Elt Ring::lift(FieldElt a) const {
  std::vector<u64> c(size(), 0);
  auto digits = k_.coeffs(a);
  const std::size_t n0 = size_[0];
  for (std::size_t j = 0; j < digits.size(); ++j) c[j * n0] = digits[j];
  Elt x(shared_from_this(), std::move(c), cap());
  if (a == 0) x.exact_zero_ = true;
  return x;
}

Elt Ring::embed_from(const Elt& x) const {
  const Ring& src = *x.ring();
  const int d = src.depth();
  if (d > depth() || !prefix(d)->same_as(src)) throw DescriptorMismatch("embedding from a non-prefix ring");
  std::vector<u64> c(size(), 0);
  std::copy(x.coeffs().begin(), x.coeffs().end(), c.begin());
  const int r = e_.back() / e_[d];
  Elt y(shared_from_this(), std::move(c), std::min(cap(), x.precision() * r));
  y.exact_zero_ = x.is_exact_zero();
  return y;
}

std::vector<Elt> Ring::coordinates_over(int d, const Elt& x) const {
  if (!x.ring()->same_as(*this)) throw DescriptorMismatch("coordinates of a foreign element");
  RingPtr base = prefix(d);
  const std::size_t n = size_[d];
  const std::size_t count = size() / n;
  const int r = e_.back() / e_[d];
  std::vector<Elt> out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    // offset of the monomial in top units
    int offset = 0;
    std::size_t rem = b;
    for (int k = d + 1; k <= depth(); ++k) {
      // mixed radix: lowest level varies fastest
      const int deg = level(k).degree;
      const int j = static_cast<int>(rem % deg);
      rem /= deg;
      if (level(k).kind == Level::Kind::eisenstein) offset += j * (e_.back() / e_[k]);
    }
    int pb = x.precision() - offset;
    pb = pb <= 0 ? 0 : (pb + r - 1) / r;
    std::vector<u64> c(x.coeffs().begin() + b * n, x.coeffs().begin() + (b + 1) * n);
    Elt y(base, std::move(c), std::min(pb, base->cap()));
    if (x.is_exact_zero()) y = base->zero();
    out.push_back(std::move(y));
  }
  return out;
}

Elt Ring::from_coordinates(int d, const std::vector<Elt>& coords) const {
  const std::size_t n = size_[d];
  if (coords.size() * n != size()) throw DescriptorMismatch("wrong number of coordinates");
  RingPtr base = prefix(d);
  std::vector<u64> c(size(), 0);
  const int r = e_.back() / e_[d];
  int prec = cap();
  bool all_zero = true;
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (!coords[b].ring()->same_as(*base)) throw DescriptorMismatch("coordinate over wrong ring");
    std::copy(coords[b].coeffs().begin(), coords[b].coeffs().end(), c.begin() + b * n);
    int offset = 0;
    std::size_t rem = b;
    for (int k = d + 1; k <= depth(); ++k) {
      const int deg = level(k).degree;
      const int j = static_cast<int>(rem % deg);
      rem /= deg;
      if (level(k).kind == Level::Kind::eisenstein) offset += j * (e_.back() / e_[k]);
    }
    if (!coords[b].is_exact_zero()) {
      all_zero = false;
      prec = std::min(prec, coords[b].precision() * r + offset);
    }
  }
  if (all_zero) return zero();
  return Elt(shared_from_this(), std::move(c), prec);
}

Elt Ring::evaluate_hom(const Elt& x, int fixed_depth, const std::vector<Elt>& images) const {
  if (!x.ring()->same_as(*this)) throw DescriptorMismatch("hom applied to a foreign element");
  if (static_cast<int>(images.size()) != depth() - fixed_depth)
    throw InvalidDescriptor("wrong number of generator images");
  if (images.empty()) return x;
  RingPtr target = images[0].ring();
  for (const auto& im : images)
    if (!im.ring()->same_as(*target)) throw DescriptorMismatch("generator images in different rings");
  if (target->depth() < fixed_depth || !target->prefix(fixed_depth)->same_as(*prefix(fixed_depth)))
    throw DescriptorMismatch("hom target does not share the fixed subring");
  if (x.is_exact_zero()) return target->zero();

  const std::size_t nfix = size_[fixed_depth];
  // Recursive Horner evaluation over the levels above fixed_depth.
  auto rec = [&](auto&& self, int k, const u64* a) -> Elt {
    if (k == fixed_depth) {
      std::vector<u64> c(target->size(), 0);
      std::copy(a, a + nfix, c.begin());
      return target->make(std::move(c), target->cap());
    }
    const int deg = level(k).degree;
    const std::size_t n = size_[k - 1];
    const Elt& img = images[k - fixed_depth - 1];
    Elt acc = self(self, k - 1, a + (deg - 1) * n);
    for (int j = deg - 2; j >= 0; --j) acc = acc * img + self(self, k - 1, a + j * n);
    return acc;
  };
  Elt y = rec(rec, depth(), x.coeffs().data());
  const long long scaled = static_cast<long long>(x.precision()) * target->abs_ramification() /
                           abs_ramification();
  return y.truncate(static_cast<int>(std::min<long long>(scaled, target->cap())));
}

// ---------------------------------------------------------------- flat kernels

bool Ring::zero_flat(int k, const u64* a) const {
  const std::size_t n = size_[k];
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

void Ring::add_flat(int k, const u64* a, const u64* b, u64* out) const {
  const std::size_t n = size_[k];
  for (std::size_t i = 0; i < n; ++i) out[i] = addm(a[i], b[i]);
}

void Ring::sub_flat(int k, const u64* a, const u64* b, u64* out) const {
  const std::size_t n = size_[k];
  for (std::size_t i = 0; i < n; ++i) out[i] = subm(a[i], b[i]);
}

void Ring::mul_flat(int k, const u64* a, const u64* b, u64* out) const {
  if (k == 0) {
    if (kind_ == RingKind::mixed) {
      out[0] = mulm(a[0], b[0]);
      return;
    }
    const int A = a_;
    std::vector<u64> acc(A, 0);
    for (int i = 0; i < A; ++i) {
      if (!a[i]) continue;
      for (int j = 0; i + j < A; ++j) {
        if (!b[j]) continue;
        acc[i + j] += a[i] * b[j];
      }
      if ((i & 63) == 63 || p_ > 65535)
        for (auto& v : acc) v %= p_;
    }
    for (int i = 0; i < A; ++i) out[i] = acc[i] % p_;
    return;
  }
  const Level& lv = levels_[k - 1];
  const int d = lv.degree;
  const std::size_t n = size_[k - 1];
  std::vector<u64> prod((2 * d - 1) * n, 0), tmp(n);
  std::vector<char> za(d), zb(d);
  for (int i = 0; i < d; ++i) {
    za[i] = zero_flat(k - 1, a + i * n);
    zb[i] = zero_flat(k - 1, b + i * n);
  }
  for (int i = 0; i < d; ++i) {
    if (za[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (zb[j]) continue;
      mul_flat(k - 1, a + i * n, b + j * n, tmp.data());
      add_flat(k - 1, prod.data() + (i + j) * n, tmp.data(), prod.data() + (i + j) * n);
    }
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    const u64* c = prod.data() + i * n;
    if (zero_flat(k - 1, c)) continue;
    for (int j = 0; j < d; ++j) {
      if (lv.poly_zero[j]) continue;
      mul_flat(k - 1, c, lv.poly.data() + j * n, tmp.data());
      u64* dst = prod.data() + (i - d + j) * n;
      sub_flat(k - 1, dst, tmp.data(), dst);
    }
  }
  std::copy(prod.begin(), prod.begin() + d * n, out);
}

int Ring::val_flat(int k, const u64* a) const {
  if (k == 0) {
    if (kind_ == RingKind::mixed) {
      u64 c = a[0];
      if (c == 0) return a_;
      int v = 0;
      while (c % p_ == 0) {
        c /= p_;
        ++v;
      }
      return v;
    }
    for (int i = 0; i < a_; ++i)
      if (a[i]) return i;
    return a_;
  }
  const Level& lv = levels_[k - 1];
  const std::size_t n = size_[k - 1];
  int best = cap_[k];
  for (int j = 0; j < lv.degree; ++j) {
    int v = val_flat(k - 1, a + j * n);
    if (v >= cap_[k - 1]) continue;
    int w = lv.kind == Level::Kind::unramified ? v : lv.degree * v + j;
    best = std::min(best, w);
  }
  return best;
}

void Ring::trunc_flat(int k, u64* a, int prec) const {
  if (prec >= cap_[k]) return;
  const std::size_t nk = size_[k];
  if (prec <= 0) {
    std::fill(a, a + nk, 0);
    return;
  }
  if (k == 0) {
    if (kind_ == RingKind::mixed)
      a[0] %= ppow_[prec];
    else
      std::fill(a + prec, a + a_, 0);
    return;
  }
  const Level& lv = levels_[k - 1];
  const std::size_t n = size_[k - 1];
  for (int j = 0; j < lv.degree; ++j) {
    int pj = lv.kind == Level::Kind::unramified ? prec : (prec - j + lv.degree - 1) / lv.degree;
    trunc_flat(k - 1, a + j * n, pj);
  }
}

void Ring::divpi_flat(int k, const u64* a, u64* out) const {
  if (k == 0) {
    if (kind_ == RingKind::mixed) {
      out[0] = a[0] / p_;
    } else {
      for (int i = 0; i + 1 < a_; ++i) out[i] = a[i + 1];
      out[a_ - 1] = 0;
    }
    return;
  }
  const Level& lv = levels_[k - 1];
  const std::size_t n = size_[k - 1];
  const int d = lv.degree;
  if (lv.kind == Level::Kind::unramified) {
    for (int j = 0; j < d; ++j) divpi_flat(k - 1, a + j * n, out + j * n);
    return;
  }
  std::vector<u64> c0(n), tmp(n);
  divpi_flat(k - 1, a, c0.data());
  std::vector<u64> res(d * n, 0);
  for (int j = 0; j + 1 < d; ++j) std::copy(a + (j + 1) * n, a + (j + 2) * n, res.begin() + j * n);
  if (!zero_flat(k - 1, c0.data())) {
    for (int j = 0; j < d; ++j) {
      mul_flat(k - 1, c0.data(), lv.q.data() + j * n, tmp.data());
      add_flat(k - 1, res.data() + j * n, tmp.data(), res.data() + j * n);
    }
  }
  std::copy(res.begin(), res.end(), out);
}

// ---------------------------------------------------------------- Elt

Elt::Elt(RingPtr ring, std::vector<u64> coeffs, int precision)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
  prec_ = std::clamp(precision, 0, ring_->cap());
  ring_->trunc_flat(ring_->depth(), c_.data(), prec_);
}

namespace {
void check_same(const Elt& a, const Elt& b) {
  if (!a.valid() || !b.valid()) throw DescriptorMismatch("uninitialised element");
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring()))
    throw DescriptorMismatch(a.ring()->describe() + " vs " + b.ring()->describe());
}
}  // namespace

Valuation Elt::valuation() const {
  if (exact_zero_) return {Valuation::State::infinite, 0};
  int v = ring_->val_flat(ring_->depth(), c_.data());
  if (v < prec_) return {Valuation::State::finite, v};
  return {Valuation::State::undetermined, prec_};
}

int Elt::val_lb() const {
  if (exact_zero_) return ring_->cap();
  int v = ring_->val_flat(ring_->depth(), c_.data());
  return std::min(v, prec_);
}

int Elt::val() const {
  Valuation v = valuation();
  if (v.finite()) return v.value;
  if (v.infinite()) throw PrecisionExhausted("valuation of exact zero requested");
  throw PrecisionExhausted("valuation undetermined at precision " + std::to_string(prec_));
}

bool Elt::val_at_least(int k) const {
  if (exact_zero_) return true;
  int v = ring_->val_flat(ring_->depth(), c_.data());
  if (v < prec_) return v >= k;
  if (prec_ >= k) return true;
  throw PrecisionExhausted("need " + std::to_string(k) + " digits, have " + std::to_string(prec_));
}

bool Elt::is_unit() const { return !val_at_least(1); }

bool Elt::is_zero_mod(int k) const { return val_at_least(k); }

Elt Elt::operator-() const {
  Elt r = *this;
  if (exact_zero_) return r;
  const std::size_t n = c_.size();
  std::vector<u64> z(n, 0);
  ring_->sub_flat(ring_->depth(), z.data(), c_.data(), r.c_.data());
  return r;
}

Elt& Elt::operator+=(const Elt& o) {
  check_same(*this, o);
  if (o.exact_zero_) return *this;
  if (exact_zero_) return *this = o;
  ring_->add_flat(ring_->depth(), c_.data(), o.c_.data(), c_.data());
  prec_ = std::min(prec_, o.prec_);
  ring_->trunc_flat(ring_->depth(), c_.data(), prec_);
  return *this;
}

Elt& Elt::operator-=(const Elt& o) {
  check_same(*this, o);
  if (o.exact_zero_) return *this;
  if (exact_zero_) return *this = -o;
  ring_->sub_flat(ring_->depth(), c_.data(), o.c_.data(), c_.data());
  prec_ = std::min(prec_, o.prec_);
  ring_->trunc_flat(ring_->depth(), c_.data(), prec_);
  return *this;
}

Elt& Elt::operator*=(const Elt& o) {
  check_same(*this, o);
  if (exact_zero_) return *this;
  if (o.exact_zero_) return *this = o;
  const int va = val_lb(), vb = o.val_lb();
  long long p = std::min<long long>(static_cast<long long>(prec_) + vb,
                                    static_cast<long long>(o.prec_) + va);
  p = std::min<long long>(p, ring_->cap());
  std::vector<u64> out(c_.size());
  ring_->mul_flat(ring_->depth(), c_.data(), o.c_.data(), out.data());
  c_ = std::move(out);
  prec_ = static_cast<int>(p);
  ring_->trunc_flat(ring_->depth(), c_.data(), prec_);
  return *this;
}

Elt Elt::pow(unsigned e) const {
  Elt result = ring_->one();
  Elt base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Elt Elt::inv_unit() const {
  if (prec_ == 0) throw PrecisionExhausted("inverse of an element with no known digits");
  if (!is_unit()) throw NonUnit("element has positive valuation");
  const Ring& R = *ring_;
  const ResidueField& k = R.residue_field();
  Elt a = R.make(c_, R.cap());
  Elt b = R.lift(k.inv(residue()));
  Elt two = R.from_int(2);
  for (int it = 0; it < 80; ++it) {
    Elt ab = a * b;
    if (ab == R.one()) break;
    b = b * (two - ab);
  }
  return b.truncate(prec_);
}

Elt Elt::div_pi(int k) const {
  if (k < 0) return mul_pi(-k);
  if (exact_zero_) return *this;
  if (!val_at_least(k)) throw NonIntegralResult("division by pi^" + std::to_string(k));
  Elt r = *this;
  std::vector<u64> tmp(c_.size());
  for (int i = 0; i < k; ++i) {
    ring_->divpi_flat(ring_->depth(), r.c_.data(), tmp.data());
    r.c_.swap(tmp);
  }
  r.prec_ = prec_ - k;
  ring_->trunc_flat(ring_->depth(), r.c_.data(), r.prec_);
  return r;
}

Elt Elt::mul_pi(int k) const {
  if (k < 0) return div_pi(-k);
  if (k == 0 || exact_zero_) return *this;
  return *this * ring_->uniformizer().pow(static_cast<unsigned>(k));
}

Elt Elt::div(const Elt& y) const {
  check_same(*this, y);
  if (y.exact_zero_) throw NonIntegralResult("division by zero");
  const int vy = y.val();
  if (exact_zero_) return *this;
  if (!val_at_least(vy)) throw NonIntegralResult("quotient is not integral");
  return div_pi(vy) * y.div_pi(vy).inv_unit();
}

Elt Elt::truncate(int precision) const {
  if (precision >= prec_ || exact_zero_) return *this;
  Elt r = *this;
  r.prec_ = std::max(precision, 0);
  ring_->trunc_flat(ring_->depth(), r.c_.data(), r.prec_);
  return r;
}

FieldElt Elt::residue() const {
  if (exact_zero_) return 0;
  if (prec_ < 1) throw PrecisionExhausted("residue of an element with no known digits");
  const Ring& R = *ring_;
  const std::size_t n0 = R.size_at(0);
  auto base_res = [&](const u64* a) -> std::uint32_t {
    return static_cast<std::uint32_t>(R.kind() == RingKind::mixed ? a[0] % R.p() : a[0]);
  };
  if (!R.has_unramified_level()) return static_cast<FieldElt>(base_res(c_.data()));
  const int s = R.residue_degree();
  std::vector<std::uint32_t> cs(s);
  for (int j = 0; j < s; ++j) cs[j] = base_res(c_.data() + j * n0);
  return R.residue_field().from_coeffs(cs);
}

std::vector<FieldElt> Elt::digits() const {
  std::vector<FieldElt> out;
  Elt x = *this;
  for (int i = 0; i < prec_; ++i) {
    FieldElt d = x.residue();
    out.push_back(d);
    x = (x - ring_->lift(d)).div_pi(1);
  }
  return out;
}

bool Elt::equals_mod(const Elt& o, int k) const { return (*this - o).val_at_least(k); }

bool Elt::operator==(const Elt& o) const {
  check_same(*this, o);
  Elt d = *this - o;
  return d.exact_zero_ || d.val_lb() >= d.prec_;
}

std::string Elt::to_string() const {
  if (!valid()) return "<invalid>";
  if (exact_zero_) return "0";
  std::ostringstream os;
  const Ring& R = *ring_;
  if (R.depth() == 0 && R.kind() == RingKind::mixed) {
    os << c_[0] << " + O(" << R.p() << "^" << prec_ << ")";
    return os.str();
  }
  auto ds = digits();
  os << "[";
  for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? " " : "") << R.residue_field().to_string(ds[i]);
  os << "] + O(pi^" << prec_ << ")";
  return os.str();
}

Elt eval_poly(const std::vector<Elt>& f, const Elt& x) {
  if (f.empty()) return x.ring()->zero();
  Elt acc = f.back();
  for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) acc = acc * x + f[i];
  return acc;
}

Elt hensel_root(const std::vector<Elt>& f, const Elt& x0) {
  const Ring& R = *x0.ring();
  std::vector<Elt> df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * R.from_int(static_cast<std::int64_t>(i)));
  if (!eval_poly(f, x0).val_at_least(1)) throw AssertionFailed("Hensel start is not a root mod pi");
  Elt x = x0;
  for (int it = 0; it < 80; ++it) {
    Elt fx = eval_poly(f, x);
    if (fx.val_lb() >= fx.precision()) break;
    Elt dx = eval_poly(df, x);
    if (!dx.is_unit()) throw NonUnit("Hensel derivative is not a unit");
    x = x - fx * dx.inv_unit();
  }
  return x;
}

}  // namespace localred
