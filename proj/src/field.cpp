#include "chainsub/field.hpp"

#include <algorithm>
#include <functional>

#include "chainsub/errors.hpp"

namespace chainsub {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Multiply two polynomials (base-p codes, degree < e) modulo the monic
// polynomial x^e - tail(x); `modulus` holds the e low coefficients of
// x^e + modulus(x).
std::vector<std::uint32_t> polymulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                      const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t e = modulus.size();
  std::vector<std::uint32_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * e - 1; d >= e; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-e) * x^e = -x^(d-e) * modulus(x)
    for (std::size_t i = 0; i < e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(e);
  return prod;
}

std::vector<std::uint32_t> decode(std::uint32_t code, std::uint32_t p, int e) {
  std::vector<std::uint32_t> out(e);
  for (int i = 0; i < e; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t encode(const std::vector<std::uint32_t>& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
  return code;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
  if (e < 1) throw InvalidArgument("field degree must be positive");
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
  if (e == 1) return;
  if (q_ > 9) throw InvalidArgument("proper extension fields are limited to q <= 9");

  // Lexicographically first monic irreducible polynomial of degree e.
  for (std::uint32_t tail = 1; tail < q_; ++tail) {
    if (tail % p == 0) continue;  // constant term must be nonzero
    const auto modulus = decode(tail, p, e);
    std::vector<FieldElem> mul(q_ * q_);
    bool domain = true;
    for (std::uint32_t a = 0; a < q_ && domain; ++a) {
      const auto pa = decode(a, p, e);
      for (std::uint32_t b = 0; b < q_; ++b) {
        const std::uint32_t c = encode(polymulmod(pa, decode(b, p, e), modulus, p), p);
        if (a != 0 && b != 0 && c == 0) {
          domain = false;
          break;
        }
        mul[a * q_ + b] = c;
      }
    }
    if (!domain) continue;
    mul_ = std::move(mul);
    break;
  }
  add_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const auto pa = decode(a, p, e);
    std::vector<std::uint32_t> na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = encode(na, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const auto pb = decode(b, p, e);
      std::vector<std::uint32_t> s(e);
      for (int i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q_ + b] = encode(s, p);
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }
  }
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (e_ > 1) return inv_[a];
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - quot * s1);
  }
  std::int64_t r = s0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldElem>(r);
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<FieldElem>>& rows, std::size_t cols) {
  FieldMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<FieldElem>> FieldMatrix::to_rows() const {
  std::vector<std::vector<FieldElem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x == 0; });
}

FieldMatrix multiply(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not compose");
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FieldElem x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
    }
  return out;
}

FieldMatrix add(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("matrix shapes differ");
  FieldMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.add(a(i, j), b(i, j));
  return out;
}

FieldMatrix scale(const FiniteField& k, FieldElem s, const FieldMatrix& a) {
  FieldMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.mul(s, a(i, j));
  return out;
}

std::vector<FieldElem> apply(const FiniteField& k, const FieldMatrix& a, std::span<const FieldElem> v) {
  if (v.size() != a.cols()) throw InvalidArgument("vector length does not match matrix");
  std::vector<FieldElem> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = k.add(out[i], k.mul(a(i, j), v[j]));
  return out;
}

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref_inplace(const FiniteField& k, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const FieldElem inv = k.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = k.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const FieldElem f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

FieldMatrix take_rows(const FieldMatrix& m, std::size_t count) {
  FieldMatrix out(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

FieldMatrix rref(const FiniteField& k, const FieldMatrix& a) {
  FieldMatrix m = a;
  const auto pivots = rref_inplace(k, m);
  return take_rows(m, pivots.size());
}

std::size_t rank(const FiniteField& k, const FieldMatrix& a) {
  FieldMatrix m = a;
  return rref_inplace(k, m).size();
}

FieldMatrix nullspace(const FiniteField& k, const FieldMatrix& a) {
  FieldMatrix m = a;
  const auto pivots = rref_inplace(k, m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m(i, f));
    basis.push_back(std::move(v));
  }
  return FieldMatrix::from_rows(basis, a.cols());
}

std::optional<std::vector<FieldElem>> solve(const FiniteField& k, const FieldMatrix& a,
                                            std::span<const FieldElem> b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length mismatch");
  FieldMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref_inplace(k, aug);
  std::vector<FieldElem> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    x[pivots[i]] = aug(i, a.cols());
  }
  return x;
}

std::optional<FieldMatrix> inverse(const FiniteField& k, const FieldMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  FieldMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_inplace(k, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  FieldMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const FiniteField& k, const FieldMatrix& a) {
  return a.rows() == a.cols() && rank(k, a) == a.rows();
}

namespace subspace {

FieldMatrix span(const FiniteField& k, const FieldMatrix& rows) { return rref(k, rows); }

std::vector<FieldElem> coordinates(const FiniteField& k, const FieldMatrix& basis, std::span<const FieldElem> v) {
  // In RREF, the coefficient of row i is the entry of v at that row's pivot.
  std::vector<FieldElem> coords(basis.rows(), 0);
  std::vector<FieldElem> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (basis(i, c) == 0) ++c;
    coords[i] = rest[c];
    if (coords[i] == 0) continue;
    for (std::size_t j = 0; j < basis.cols(); ++j) rest[j] = k.sub(rest[j], k.mul(coords[i], basis(i, j)));
  }
  if (std::any_of(rest.begin(), rest.end(), [](FieldElem x) { return x != 0; }))
    throw InvalidArgument("vector is not in the subspace");
  return coords;
}

bool contains(const FiniteField& k, const FieldMatrix& basis, std::span<const FieldElem> v) {
  FieldMatrix stacked(basis.rows() + 1, basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) stacked(i, j) = basis(i, j);
  for (std::size_t j = 0; j < basis.cols(); ++j) stacked(basis.rows(), j) = v[j];
  return rank(k, stacked) == rank(k, basis);
}

FieldMatrix intersect(const FiniteField& k, const FieldMatrix& a, const FieldMatrix& b) {
  // Solve x a - y b = 0 over the stacked rows; the x-part yields the intersection.
  const std::size_t n = a.cols();
  FieldMatrix stacked(n, a.rows() + b.rows());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) stacked(j, i) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) stacked(j, a.rows() + i) = k.neg(b(i, j));
  }
  const FieldMatrix ker = nullspace(k, stacked);
  FieldMatrix gens(ker.rows(), n);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (ker(r, i) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) gens(r, j) = k.add(gens(r, j), k.mul(ker(r, i), a(i, j)));
    }
  return rref(k, gens);
}

FieldMatrix image(const FiniteField& k, const FieldMatrix& m, const FieldMatrix& basis) {
  return rref(k, multiply(k, basis, m.transpose()));
}

FieldMatrix random(const FiniteField& k, std::size_t n, std::size_t gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, k.order() - 1);
  FieldMatrix m(gens, n);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return rref(k, m);
}

std::vector<FieldMatrix> enumerate_all(const FiniteField& k, std::size_t n) {
  std::vector<FieldMatrix> out;
  // Choose pivot sets in increasing size, then fill the free entries.
  for (std::size_t r = 0; r <= n; ++r) {
    std::vector<std::size_t> piv(r);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
      if (idx == r) {
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t c = piv[i] + 1; c < n; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
        std::vector<FieldElem> vals(free.size(), 0);
        while (true) {
          FieldMatrix m(r, n);
          for (std::size_t i = 0; i < r; ++i) m(i, piv[i]) = 1;
          for (std::size_t f = 0; f < free.size(); ++f) m(free[f].first, free[f].second) = vals[f];
          out.push_back(m);
          std::size_t pos = 0;
          while (pos < vals.size() && ++vals[pos] == k.order()) vals[pos++] = 0;
          if (pos == vals.size()) break;
        }
        return;
      }
      for (std::size_t c = start; c < n; ++c) {
        piv[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

}  // namespace subspace

}  // namespace chainsub
