#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chainsub/field.hpp"

namespace chainsub {

enum class RingKind { IntegersModPrimePower, TruncatedPolynomials };

/// Describes a finite chain ring: Z/p^n or F_q[T]/T^n.
struct RingDescriptor {
  RingKind kind = RingKind::IntegersModPrimePower;
  std::uint64_t p = 2;  // residue characteristic (zmod) or field order q (truncpoly)
  int n = 7;

  static RingDescriptor zmod(std::uint64_t p, int n) { return {RingKind::IntegersModPrimePower, p, n}; }
  static RingDescriptor truncpoly(std::uint64_t q, int n) { return {RingKind::TruncatedPolynomials, q, n}; }

  std::string to_string() const;
  bool operator==(const RingDescriptor&) const = default;
};

/// An element of the ring in canonical form.
///
/// The code is the integer representative in [0, p^n) for Z/p^n, and the
/// base-q encoding sum c_i q^i of the coefficient vector for F_q[T]/T^n.
/// In both cases the code of t^v * u is base^v * code(u) when that product
/// stays below base^n, which is what the t-adic helpers below exploit.
struct RingElement {
  std::uint64_t code = 0;
  auto operator<=>(const RingElement&) const = default;
};

/// Exact arithmetic in a commutative local uniserial ring of finite length.
class Ring {
 public:
  explicit Ring(const RingDescriptor& d);

  const RingDescriptor& descriptor() const { return desc_; }
  int length() const { return desc_.n; }
  const FiniteField& residue_field() const { return field_; }
  /// p for Z/p^n, q for F_q[T]/T^n.
  std::uint64_t base() const { return base_; }
  /// Number of elements of Lambda / t^e.
  std::uint64_t count(int e) const { return pow_[static_cast<std::size_t>(e)]; }

  RingElement zero() const { return {0}; }
  RingElement one() const { return {desc_.n > 0 ? 1u : 0u}; }
  RingElement t() const { return t_pow(1); }
  RingElement t_pow(int k) const { return k >= desc_.n ? RingElement{0} : RingElement{pow_[static_cast<std::size_t>(k)]}; }
  RingElement from_int(std::int64_t v) const;

  RingElement add(RingElement a, RingElement b) const {
    if (poly_) return poly_add(a, b);
    const std::uint64_t s = a.code + b.code;
    return {s >= size_ ? s - size_ : s};
  }
  RingElement neg(RingElement a) const {
    if (poly_) return poly_neg(a);
    return {a.code == 0 ? 0 : size_ - a.code};
  }
  RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }
  RingElement mul(RingElement a, RingElement b) const {
    if (poly_) return poly_mul(a, b);
    if (mask_ != 0) return {(a.code * b.code) & mask_};
    return {static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.code) * b.code) % size_)};
  }

  /// t-adic valuation; returns length() for zero.
  int val(RingElement a) const {
    if (a.code == 0) return desc_.n;
    int v = 0;
    if (base_ == 2) return __builtin_ctzll(a.code);
    while (a.code % base_ == 0) {
      a.code /= base_;
      ++v;
    }
    return v;
  }
  /// t-adic valuation with zero mapped to "infinity".
  std::optional<int> valuation(RingElement a) const {
    if (a.code == 0) return std::nullopt;
    return val(a);
  }
  bool is_unit(RingElement a) const { return a.code % base_ != 0; }

  RingElement mul_t_pow(RingElement a, int k) const {
    if (k >= desc_.n) return {0};
    return {(a.code % pow_[static_cast<std::size_t>(desc_.n - k)]) * pow_[static_cast<std::size_t>(k)]};
  }
  /// Canonical representative of a modulo t^e.
  RingElement reduce(RingElement a, int e) const {
    if (e >= desc_.n) return a;
    if (base_ == 2) return {a.code & (pow_[static_cast<std::size_t>(e)] - 1)};
    return {a.code % pow_[static_cast<std::size_t>(e)]};
  }
  /// Writes a = quotient * t^v + remainder with the remainder reduced mod t^v.
  std::pair<RingElement, RingElement> divmod_t_pow(RingElement a, int v) const {
    const std::uint64_t m = pow_[static_cast<std::size_t>(v)];
    return {{a.code / m}, {a.code % m}};
  }
  /// a = unit * t^val(a); the unit is canonical. For zero returns (1, n).
  std::pair<RingElement, int> unit_part(RingElement a) const;
  RingElement unit_inverse(RingElement u) const;
  /// Some c with a * c = b; requires val(a) <= val(b).
  RingElement divide(RingElement b, RingElement a) const;

  FieldElem residue(RingElement a) const { return static_cast<FieldElem>(a.code % base_); }
  /// Least-residue lift for Z/p^n, constant polynomial for F_q[T]/T^n.
  RingElement lift(FieldElem x) const { return {x}; }

  /// Coefficients lowest-degree first (truncpoly) or the single integer (zmod).
  std::vector<std::uint64_t> coefficients(RingElement a) const;
  RingElement from_coefficients(const std::vector<std::uint64_t>& c) const;

  std::string format(RingElement a) const;

  bool operator==(const Ring& o) const { return desc_ == o.desc_; }

 private:
  RingElement poly_add(RingElement a, RingElement b) const;
  RingElement poly_neg(RingElement a) const;
  RingElement poly_mul(RingElement a, RingElement b) const;

  RingDescriptor desc_;
  FiniteField field_;
  bool poly_ = false;
  std::uint64_t base_ = 2;
  std::uint64_t size_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<std::uint64_t> pow_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const RingDescriptor& d);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace chainsub
