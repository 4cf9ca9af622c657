#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chainsub/ring.hpp"

namespace chainsub {

using RingVector = std::vector<RingElement>;

/// Matrix over a chain ring whose rows are vectors of the cyclic sum
/// ⊕_j Λ/t^{e_j}; e_j is the modulus exponent of column j. Entries are kept
/// reduced modulo their column modulus.
class RingMatrix {
 public:
  RingMatrix() = default;
  /// Zero matrix; an empty `col_exp` means every column has modulus t^n.
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<int> col_exp = {});
  static RingMatrix from_rows(RingPtr ring, std::vector<RingVector> rows, std::size_t cols,
                              std::vector<int> col_exp = {});
  static RingMatrix identity(RingPtr ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<int>& col_exp() const { return col_exp_; }

  RingElement operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, RingElement v);
  const RingVector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<RingVector>& row_data() const { return rows_; }
  void append_row(RingVector v);

  bool operator==(const RingMatrix& o) const { return cols_ == o.cols_ && col_exp_ == o.col_exp_ && rows_ == o.rows_; }

 private:
  RingPtr ring_;
  std::size_t cols_ = 0;
  std::vector<int> col_exp_;
  std::vector<RingVector> rows_;
};

/// Vector helpers over ⊕_j Λ/t^{e_j}.
namespace vec {

RingVector zero(std::size_t n);
bool is_zero(std::span<const RingElement> v);
void reduce(const Ring& r, std::span<RingElement> v, std::span<const int> exps);
RingVector add(const Ring& r, std::span<const RingElement> a, std::span<const RingElement> b, std::span<const int> exps);
RingVector sub(const Ring& r, std::span<const RingElement> a, std::span<const RingElement> b, std::span<const int> exps);
RingVector scale(const Ring& r, RingElement s, std::span<const RingElement> a, std::span<const int> exps);
/// a += s * b, componentwise reduced.
void axpy(const Ring& r, RingVector& a, RingElement s, std::span<const RingElement> b, std::span<const int> exps,
          std::size_t from = 0);
RingVector t_scale(const Ring& r, std::span<const RingElement> a, int k, std::span<const int> exps);

}  // namespace vec

struct HowellResult {
  RingMatrix form;       ///< canonical Howell basis of the row span
  RingMatrix transform;  ///< form ≡ transform · input modulo the column moduli
};

/// Howell normal form of the row span: rows sorted by pivot column, pivots
/// exactly t^v, entries above a pivot t^v reduced modulo t^v, and every span
/// element whose first c coordinates vanish lies in the span of the rows
/// pivoting after column c. Unique for a given span.
HowellResult howell_form(const RingMatrix& a);

/// Howell basis only, no transform bookkeeping.
std::vector<RingVector> howell_rows(const Ring& r, std::vector<RingVector> rows, std::span<const int> exps);

/// Reduces v modulo the span of Howell rows. Returns the canonical coset
/// representative; it is zero exactly when v lies in the span.
RingVector howell_reduce(const Ring& r, std::span<const RingVector> basis, RingVector v, std::span<const int> exps);

/// Rows are split as (first | second) at column `split`. Returns the second
/// blocks of the Howell rows whose first block vanishes: these generate
/// {y : (0 | y) ∈ span}.
std::vector<RingVector> split_kernel(const Ring& r, std::vector<RingVector> rows, std::span<const int> exps,
                                     std::size_t split);

/// Pivot column of a Howell row (first nonzero entry).
std::size_t pivot_column(std::span<const RingElement> v);

struct LinearSolution {
  RingVector particular;
  std::vector<RingVector> kernel;  ///< Λ-module generators of the solution kernel
};

/// Solves Σ_i x_i · row_i(A) ≡ b in ⊕_j Λ/t^{e_j} (e = A.col_exp()).
/// The unknown x_i ranges over Λ/t^{s_i}; an empty `unknown_exp` means Λ.
/// Returns nullopt when b is outside the row span.
std::optional<LinearSolution> solve_linear(const RingMatrix& a, std::span<const RingElement> b,
                                           std::span<const int> unknown_exp = {});

struct SmithResult {
  std::vector<int> exps;  ///< valuation of each diagonal entry, length cols; n for zero
  RingMatrix col_transform;
  RingMatrix col_transform_inv;
};

/// Column-transform part of a Smith decomposition P·A·Q = diag(t^{d_i}) over Λ
/// (no column moduli; append modulus rows beforehand if needed). The pivot
/// at each step is an entry of least valuation, ties broken by lowest row
/// then lowest column, so the transform is deterministic.
SmithResult smith_form(const Ring& r, std::vector<RingVector> rows, std::size_t cols);

}  // namespace chainsub
