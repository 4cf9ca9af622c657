#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace chainsub {

/// Element of a finite field, stored as its code in [0, q).
///
/// For a prime field the code is the residue itself. For F_q with q = p^e,
/// e > 1, the code is the base-p encoding of the polynomial representative
/// in the chosen generator (lowest degree first).
using FieldElem = std::uint32_t;

/// Finite field F_q, q = p^e. Prime fields compute directly, proper
/// extensions (q <= 9) are table driven.
class FiniteField {
 public:
  FiniteField() = default;
  FiniteField(std::uint32_t p, int e);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t order() const { return q_; }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (e_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_[a * q_ + b];
  }
  FieldElem neg(FieldElem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (e_ == 1) return static_cast<FieldElem>((std::uint64_t{a} * b) % p_);
    return mul_[a * q_ + b];
  }
  /// Multiplicative inverse; a must be nonzero.
  FieldElem inv(FieldElem a) const;

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  std::uint32_t p_ = 2;
  int e_ = 1;
  std::uint32_t q_ = 2;
  std::vector<FieldElem> add_, mul_, neg_, inv_;
};

/// Dense matrix over a finite field. Maps act on column vectors, so a map
/// k^a -> k^b is a b x a matrix.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(const std::vector<std::vector<FieldElem>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<std::vector<FieldElem>> to_rows() const;

  FieldMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const FieldMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

FieldMatrix multiply(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix add(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix scale(const FiniteField& k, FieldElem s, const FieldMatrix& a);
std::vector<FieldElem> apply(const FiniteField& k, const FieldMatrix& a, std::span<const FieldElem> v);

/// Reduced row echelon form; zero rows are dropped.
FieldMatrix rref(const FiniteField& k, const FieldMatrix& a);
std::size_t rank(const FiniteField& k, const FieldMatrix& a);
/// Basis (as rows) of {x : a x = 0}.
FieldMatrix nullspace(const FiniteField& k, const FieldMatrix& a);
/// Some x with a x = b, if any.
std::optional<std::vector<FieldElem>> solve(const FiniteField& k, const FieldMatrix& a,
                                            std::span<const FieldElem> b);
std::optional<FieldMatrix> inverse(const FiniteField& k, const FieldMatrix& a);
bool is_invertible(const FiniteField& k, const FieldMatrix& a);

/// Subspaces of k^n are handled as reduced row bases (RREF, no zero rows).
namespace subspace {

FieldMatrix span(const FiniteField& k, const FieldMatrix& rows);
bool contains(const FiniteField& k, const FieldMatrix& basis, std::span<const FieldElem> v);
/// Coordinates of v in the given RREF basis; v must lie in the span.
std::vector<FieldElem> coordinates(const FiniteField& k, const FieldMatrix& basis, std::span<const FieldElem> v);
FieldMatrix intersect(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b);
/// Image of the row space under the map m (columns act on column vectors).
FieldMatrix image(const FiniteField& k, const FieldMatrix& m, const FieldMatrix& basis);
/// Uniformly random subspace spanned by `gens` random vectors of k^n.
FieldMatrix random(const FiniteField& k, std::size_t n, std::size_t gens, std::mt19937_64& rng);
/// All subspaces of k^n (only sensible for tiny q and n).
std::vector<FieldMatrix> enumerate_all(const FiniteField& k, std::size_t n);

}  // namespace subspace

}  // namespace chainsub
