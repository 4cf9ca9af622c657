#include "chainsub/ring_matrix.hpp"

#include <algorithm>

#include "chainsub/errors.hpp"

namespace chainsub {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<int> col_exp)
    : ring_(std::move(ring)), cols_(cols), col_exp_(std::move(col_exp)), rows_(rows, RingVector(cols)) {
  if (col_exp_.empty()) col_exp_.assign(cols, ring_->length());
  if (col_exp_.size() != cols) throw InvalidArgument("column modulus count does not match column count");
  for (int e : col_exp_)
    if (e < 0 || e > ring_->length()) throw InvalidArgument("column modulus exponent out of range");
}

RingMatrix RingMatrix::from_rows(RingPtr ring, std::vector<RingVector> rows, std::size_t cols,
                                 std::vector<int> col_exp) {
  RingMatrix m(std::move(ring), 0, cols, std::move(col_exp));
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
  return m;
}

void RingMatrix::set(std::size_t r, std::size_t c, RingElement v) { rows_[r][c] = ring_->reduce(v, col_exp_[c]); }

void RingMatrix::append_row(RingVector v) {
  if (v.size() != cols_) throw InvalidArgument("row length does not match column count");
  vec::reduce(*ring_, v, col_exp_);
  rows_.push_back(std::move(v));
}

namespace vec {

RingVector zero(std::size_t n) { return RingVector(n); }

bool is_zero(std::span<const RingElement> v) {
  return std::all_of(v.begin(), v.end(), [](RingElement x) { return x.code == 0; });
}

void reduce(const Ring& r, std::span<RingElement> v, std::span<const int> exps) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.reduce(v[i], exps[i]);
}

RingVector add(const Ring& r, std::span<const RingElement> a, std::span<const RingElement> b,
               std::span<const int> exps) {
  RingVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.reduce(r.add(a[i], b[i]), exps[i]);
  return out;
}

RingVector sub(const Ring& r, std::span<const RingElement> a, std::span<const RingElement> b,
               std::span<const int> exps) {
  RingVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.reduce(r.sub(a[i], b[i]), exps[i]);
  return out;
}

RingVector scale(const Ring& r, RingElement s, std::span<const RingElement> a, std::span<const int> exps) {
  RingVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.reduce(r.mul(s, a[i]), exps[i]);
  return out;
}

void axpy(const Ring& r, RingVector& a, RingElement s, std::span<const RingElement> b, std::span<const int> exps,
          std::size_t from) {
  if (s.code == 0) return;
  for (std::size_t i = from; i < a.size(); ++i) {
    if (b[i].code == 0) continue;
    a[i] = r.reduce(r.add(a[i], r.mul(s, b[i])), exps[i]);
  }
}

RingVector t_scale(const Ring& r, std::span<const RingElement> a, int k, std::span<const int> exps) {
  RingVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.reduce(r.mul_t_pow(a[i], k), exps[i]);
  return out;
}

}  // namespace vec

std::size_t pivot_column(std::span<const RingElement> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].code != 0) return i;
  return v.size();
}

namespace {

struct TrackedRow {
  RingVector v;
  RingVector tr;  // combination of the input rows; empty when not tracked
};

std::vector<TrackedRow> howell_impl(const Ring& R, std::vector<TrackedRow> input, std::span<const int> exps) {
  const std::size_t m = exps.size();
  const bool track = !input.empty() && !input.front().tr.empty();
  const std::vector<int> tr_exps(track ? input.front().tr.size() : 0, R.length());

  std::vector<TrackedRow> rem;
  rem.reserve(input.size());
  for (auto& r : input)
    if (!vec::is_zero(r.v)) rem.push_back(std::move(r));

  std::vector<TrackedRow> result;
  for (std::size_t c = 0; c < m && !rem.empty(); ++c) {
    std::size_t best = rem.size();
    int best_val = exps[c];
    for (std::size_t i = 0; i < rem.size(); ++i) {
      const RingElement x = rem[i].v[c];
      if (x.code == 0) continue;
      const int v = R.val(x);
      if (v < best_val) {
        best_val = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == rem.size()) continue;

    TrackedRow piv = std::move(rem[best]);
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(best));

    const auto [u, v] = R.unit_part(piv.v[c]);
    if (u != R.one()) {
      const RingElement inv = R.unit_inverse(u);
      piv.v = vec::scale(R, inv, piv.v, exps);
      if (track) piv.tr = vec::scale(R, inv, piv.tr, tr_exps);
    }

    for (auto& r : rem) {
      const RingElement x = r.v[c];
      if (x.code == 0) continue;
      const RingElement f = R.neg(R.divmod_t_pow(x, best_val).first);
      vec::axpy(R, r.v, f, piv.v, exps, c);
      if (track) vec::axpy(R, r.tr, f, piv.tr, tr_exps);
    }

    // t^(e_c - v) * pivot row vanishes at column c but may not vanish later.
    const int k = exps[c] - best_val;
    TrackedRow ann{vec::t_scale(R, piv.v, k, exps), {}};
    if (!vec::is_zero(ann.v)) {
      if (track) ann.tr = vec::t_scale(R, piv.tr, k, tr_exps);
      rem.push_back(std::move(ann));
    }
    std::erase_if(rem, [](const TrackedRow& r) { return vec::is_zero(r.v); });
    result.push_back(std::move(piv));
  }

  for (std::size_t j = 0; j < result.size(); ++j) {
    const std::size_t c = pivot_column(result[j].v);
    const int v = R.val(result[j].v[c]);
    for (std::size_t i = 0; i < j; ++i) {
      const RingElement quot = R.divmod_t_pow(result[i].v[c], v).first;
      if (quot.code == 0) continue;
      const RingElement f = R.neg(quot);
      vec::axpy(R, result[i].v, f, result[j].v, exps, c);
      if (track) vec::axpy(R, result[i].tr, f, result[j].tr, tr_exps);
    }
  }
  return result;
}

}  // namespace

HowellResult howell_form(const RingMatrix& a) {
  const Ring& R = *a.ring();
  std::vector<TrackedRow> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RingVector tr(a.rows());
    tr[i] = R.one();
    rows.push_back({a.row(i), std::move(tr)});
  }
  auto out = howell_impl(R, std::move(rows), a.col_exp());
  HowellResult res{RingMatrix(a.ring(), 0, a.cols(), a.col_exp()), RingMatrix(a.ring(), 0, a.rows())};
  for (auto& r : out) {
    res.form.append_row(std::move(r.v));
    res.transform.append_row(std::move(r.tr));
  }
  return res;
}

std::vector<RingVector> howell_rows(const Ring& r, std::vector<RingVector> rows, std::span<const int> exps) {
  std::vector<TrackedRow> in;
  in.reserve(rows.size());
  for (auto& v : rows) {
    vec::reduce(r, v, exps);
    in.push_back({std::move(v), {}});
  }
  auto out = howell_impl(r, std::move(in), exps);
  std::vector<RingVector> res;
  res.reserve(out.size());
  for (auto& t : out) res.push_back(std::move(t.v));
  return res;
}

RingVector howell_reduce(const Ring& r, std::span<const RingVector> basis, RingVector v, std::span<const int> exps) {
  for (const auto& row : basis) {
    const std::size_t c = pivot_column(row);
    const RingElement quot = r.divmod_t_pow(v[c], r.val(row[c])).first;
    if (quot.code != 0) vec::axpy(r, v, r.neg(quot), row, exps, c);
  }
  return v;
}

std::vector<RingVector> split_kernel(const Ring& r, std::vector<RingVector> rows, std::span<const int> exps,
                                     std::size_t split) {
  std::vector<RingVector> out;
  for (auto& row : howell_rows(r, std::move(rows), exps))
    if (pivot_column(row) >= split) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(split), row.end());
  return out;
}

std::optional<LinearSolution> solve_linear(const RingMatrix& a, std::span<const RingElement> b,
                                           std::span<const int> unknown_exp) {
  const Ring& R = *a.ring();
  const std::size_t nc = a.cols(), nr = a.rows();
  if (b.size() != nc) throw InvalidArgument("solve_linear: right-hand side has wrong length");
  if (!unknown_exp.empty() && unknown_exp.size() != nr)
    throw InvalidArgument("solve_linear: unknown modulus count mismatch");

  std::vector<int> exps(a.col_exp());
  for (std::size_t i = 0; i < nr; ++i) exps.push_back(unknown_exp.empty() ? R.length() : unknown_exp[i]);

  std::vector<RingVector> rows;
  rows.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    RingVector v(nc + nr);
    std::copy(a.row(i).begin(), a.row(i).end(), v.begin());
    v[nc + i] = R.one();
    rows.push_back(std::move(v));
  }
  const auto basis = howell_rows(R, std::move(rows), exps);

  RingVector target(nc + nr);
  for (std::size_t j = 0; j < nc; ++j) target[j] = R.reduce(b[j], exps[j]);
  const RingVector residue = howell_reduce(R, basis, std::move(target), exps);
  if (!vec::is_zero(std::span(residue).first(nc))) return std::nullopt;

  LinearSolution sol;
  sol.particular.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) sol.particular[i] = R.reduce(R.neg(residue[nc + i]), exps[nc + i]);
  for (const auto& row : basis)
    if (pivot_column(row) >= nc) sol.kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(nc), row.end());
  // The kernel rows are themselves a Howell basis, so this picks the
  // canonical representative of the solution coset.
  const std::span<const int> unk(exps.data() + nc, nr);
  sol.particular = howell_reduce(R, sol.kernel, std::move(sol.particular), unk);
  return sol;
}

SmithResult smith_form(const Ring& R, std::vector<RingVector> a, std::size_t cols) {
  const std::size_t nr = a.size();
  const int n = R.length();
  const std::vector<int> full(cols, n);
  auto ring = std::make_shared<const Ring>(R.descriptor());
  std::vector<RingVector> q(cols, RingVector(cols)), qinv(cols, RingVector(cols));
  for (std::size_t i = 0; i < cols; ++i) q[i][i] = qinv[i][i] = R.one();

  std::size_t s = 0;
  for (; s < std::min(nr, cols); ++s) {
    std::size_t bi = nr, bj = cols;
    int bv = n;
    for (std::size_t i = s; i < nr && bv > 0; ++i)
      for (std::size_t j = s; j < cols; ++j) {
        if (a[i][j].code == 0) continue;
        const int v = R.val(a[i][j]);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi == nr) break;

    std::swap(a[s], a[bi]);
    if (bj != s) {
      for (auto& row : a) std::swap(row[s], row[bj]);
      for (auto& row : q) std::swap(row[s], row[bj]);
      std::swap(qinv[s], qinv[bj]);
    }
    const auto [u, v] = R.unit_part(a[s][s]);
    if (u != R.one()) a[s] = vec::scale(R, R.unit_inverse(u), a[s], full);

    for (std::size_t i = s + 1; i < nr; ++i) {
      if (a[i][s].code == 0) continue;
      vec::axpy(R, a[i], R.neg(R.divmod_t_pow(a[i][s], v).first), a[s], full, s);
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      if (a[s][j].code == 0) continue;
      const RingElement f = R.divmod_t_pow(a[s][j], v).first;
      a[s][j] = R.zero();
      // column j -= f * column s in Q, row s += f * row j in Q^{-1}
      for (auto& row : q) row[j] = R.sub(row[j], R.mul(f, row[s]));
      vec::axpy(R, qinv[s], f, qinv[j], full);
    }
  }

  SmithResult res;
  res.exps.assign(cols, n);
  for (std::size_t i = 0; i < s; ++i) res.exps[i] = R.val(a[i][i]);
  res.col_transform = RingMatrix::from_rows(ring, std::move(q), cols);
  res.col_transform_inv = RingMatrix::from_rows(ring, std::move(qinv), cols);
  return res;
}

}  // namespace chainsub
