#include "chainsub/ring.hpp"

#include <sstream>

#include "chainsub/errors.hpp"

namespace chainsub {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Keeps every code, and every product of two codes before reduction for
// the zmod case, representable in 128 bits; p^n itself must fit 62 bits.
constexpr unsigned __int128 kMaxSize = static_cast<unsigned __int128>(1) << 62;

}  // namespace

std::string RingDescriptor::to_string() const {
  std::ostringstream os;
  if (kind == RingKind::IntegersModPrimePower)
    os << "Z/" << p << "^" << n;
  else
    os << "F_" << p << "[T]/T^" << n;
  return os.str();
}

Ring::Ring(const RingDescriptor& d) : desc_(d) {
  if (d.n < 1) throw InvalidArgument("ring length must be at least 1");
  poly_ = d.kind == RingKind::TruncatedPolynomials;
  base_ = d.p;
  if (poly_) {
    std::uint64_t p = 0;
    for (std::uint64_t c = 2; c <= d.p; ++c)
      if (d.p % c == 0) {
        p = c;
        break;
      }
    int e = 0;
    std::uint64_t rest = d.p;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (p == 0 || rest != 1) throw InvalidArgument("q must be a prime power");
    if (d.p > 9) throw InvalidArgument("truncated polynomial rings are limited to q <= 9");
    field_ = FiniteField(static_cast<std::uint32_t>(p), e);
  } else {
    if (!is_prime(d.p)) throw InvalidArgument("p must be prime");
    field_ = FiniteField(static_cast<std::uint32_t>(d.p), 1);
  }
  pow_.assign(static_cast<std::size_t>(d.n) + 1, 1);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= d.n; ++i) {
    acc *= base_;
    if (acc > kMaxSize) throw InvalidArgument("ring " + d.to_string() + " exceeds 62-bit element codes");
    pow_[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(acc);
  }
  size_ = pow_.back();
  if (!poly_ && base_ == 2) mask_ = size_ - 1;
}

RingPtr make_ring(const RingDescriptor& d) { return std::make_shared<const Ring>(d); }

RingElement Ring::from_int(std::int64_t v) const {
  if (poly_) {
    // The image of an integer in F_q[T]/T^n is a constant in the prime field.
    const std::int64_t p = field_.characteristic();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return {static_cast<std::uint64_t>(r)};
  }
  const auto m = static_cast<std::int64_t>(size_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r)};
}

std::pair<RingElement, int> Ring::unit_part(RingElement a) const {
  if (a.code == 0) return {one(), desc_.n};
  const int v = val(a);
  return {{a.code / pow_[static_cast<std::size_t>(v)]}, v};
}

RingElement Ring::unit_inverse(RingElement u) const {
  if (!is_unit(u)) throw InvalidArgument("element is not a unit");
  if (poly_) {
    const std::size_t n = static_cast<std::size_t>(desc_.n);
    std::vector<FieldElem> c(n), b(n, 0);
    std::uint64_t code = u.code;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<FieldElem>(code % base_);
      code /= base_;
    }
    const FieldElem c0inv = field_.inv(c[0]);
    b[0] = c0inv;
    for (std::size_t k = 1; k < n; ++k) {
      FieldElem s = 0;
      for (std::size_t i = 1; i <= k; ++i) s = field_.add(s, field_.mul(c[i], b[k - i]));
      b[k] = field_.neg(field_.mul(c0inv, s));
    }
    std::uint64_t out = 0;
    for (std::size_t i = n; i-- > 0;) out = out * base_ + b[i];
    return {out};
  }
  __int128 r0 = static_cast<__int128>(size_), r1 = u.code, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 quot = r0 / r1;
    const __int128 r2 = r0 - quot * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - quot * s1;
    s0 = s1;
    s1 = s2;
  }
  __int128 res = s0 % static_cast<__int128>(size_);
  if (res < 0) res += size_;
  return {static_cast<std::uint64_t>(res)};
}

RingElement Ring::divide(RingElement b, RingElement a) const {
  const auto [u, v] = unit_part(a);
  if (val(b) < v) throw InvalidArgument("divide: divisor has larger valuation than dividend");
  if (v >= desc_.n) return zero();
  const auto [quot, rem] = divmod_t_pow(b, v);
  return mul(quot, unit_inverse(u));
}

RingElement Ring::poly_add(RingElement a, RingElement b) const {
  if (field_.characteristic() == 2) return {a.code ^ b.code};
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < desc_.n; ++i) {
    const auto x = static_cast<FieldElem>(a.code % base_);
    const auto y = static_cast<FieldElem>(b.code % base_);
    out += scale * field_.add(x, y);
    a.code /= base_;
    b.code /= base_;
    scale *= base_;
  }
  return {out};
}

RingElement Ring::poly_neg(RingElement a) const {
  if (field_.characteristic() == 2) return a;
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < desc_.n; ++i) {
    out += scale * field_.neg(static_cast<FieldElem>(a.code % base_));
    a.code /= base_;
    scale *= base_;
  }
  return {out};
}

RingElement Ring::poly_mul(RingElement a, RingElement b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const std::size_t n = static_cast<std::size_t>(desc_.n);
  FieldElem x[64], y[64], z[64];
  std::size_t dx = 0, dy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<FieldElem>(a.code % base_);
    y[i] = static_cast<FieldElem>(b.code % base_);
    a.code /= base_;
    b.code /= base_;
    z[i] = 0;
    if (x[i]) dx = i + 1;
    if (y[i]) dy = i + 1;
  }
  for (std::size_t i = 0; i < dx; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dy && i + j < n; ++j) z[i + j] = field_.add(z[i + j], field_.mul(x[i], y[j]));
  }
  std::uint64_t out = 0;
  for (std::size_t i = n; i-- > 0;) out = out * base_ + z[i];
  return {out};
}

std::vector<std::uint64_t> Ring::coefficients(RingElement a) const {
  if (!poly_) return {a.code};
  std::vector<std::uint64_t> c;
  while (a.code != 0) {
    c.push_back(a.code % base_);
    a.code /= base_;
  }
  return c;
}

RingElement Ring::from_coefficients(const std::vector<std::uint64_t>& c) const {
  if (!poly_) {
    if (c.size() != 1) throw InvalidArgument("zmod element expects a single integer");
    return {c[0] % size_};
  }
  if (c.size() > static_cast<std::size_t>(desc_.n)) throw InvalidArgument("polynomial has degree >= n");
  std::uint64_t out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= base_) throw InvalidArgument("coefficient outside the residue field");
    out = out * base_ + c[i];
  }
  return {out};
}

std::string Ring::format(RingElement a) const {
  if (!poly_) return std::to_string(a.code);
  std::ostringstream os;
  const auto c = coefficients(a);
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i > 0) os << "T" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace chainsub
