#include "chainsub/delta.hpp"

#include <random>

#include "chainsub/errors.hpp"

namespace chainsub {

namespace {

void check_shape(const FieldMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw InvalidArgument(std::string(name) + " has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                          std::to_string(cols));
}

FieldMatrix block_diag(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

// Columns of a stacked on top of the columns of b.
FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

FieldMatrix hstack(const std::vector<const FieldMatrix*>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (auto* p : parts) cols += p->cols();
  FieldMatrix out(rows, cols);
  std::size_t off = 0;
  for (auto* p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p->cols(); ++j) out(i, off + j) = (*p)(i, j);
    off += p->cols();
  }
  return out;
}

}  // namespace

DeltaRep::DeltaRep(FiniteField k, std::array<std::size_t, 3> d, FieldMatrix a, FieldMatrix b, FieldMatrix c)
    : field(std::move(k)), dims(d), alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  check_shape(alpha, dims[0], dims[1], "alpha");
  check_shape(beta, dims[0], dims[2], "beta");
  check_shape(gamma, dims[0], dims[2], "gamma");
  for (const auto* m : {&alpha, &beta, &gamma})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (auto x : m->row(i))
        if (x >= field.order()) throw InvalidArgument("matrix entry outside the field");
}

DeltaRep DeltaRep::simple(const FiniteField& k, int vertex) {
  if (vertex < 1 || vertex > 3) throw InvalidArgument("Δ has vertices 1, 2, 3");
  std::array<std::size_t, 3> d{0, 0, 0};
  d[static_cast<std::size_t>(vertex - 1)] = 1;
  return DeltaRep(k, d, FieldMatrix(d[0], d[1]), FieldMatrix(d[0], d[2]), FieldMatrix(d[0], d[2]));
}

DeltaRep direct_sum(const DeltaRep& a, const DeltaRep& b) {
  if (!(a.field == b.field)) throw InvalidArgument("representations over different fields");
  return DeltaRep(a.field, {a.dims[0] + b.dims[0], a.dims[1] + b.dims[1], a.dims[2] + b.dims[2]},
                  block_diag(a.alpha, b.alpha), block_diag(a.beta, b.beta), block_diag(a.gamma, b.gamma));
}

bool is_morphism(const DeltaRep& r, const DeltaRep& s, const DeltaMorphism& g) {
  const auto& k = r.field;
  if (g.g1.rows() != s.dims[0] || g.g1.cols() != r.dims[0] || g.g2.rows() != s.dims[1] ||
      g.g2.cols() != r.dims[1] || g.g3.rows() != s.dims[2] || g.g3.cols() != r.dims[2])
    return false;
  return multiply(k, g.g1, r.alpha) == multiply(k, s.alpha, g.g2) &&
         multiply(k, g.g1, r.beta) == multiply(k, s.beta, g.g3) &&
         multiply(k, g.g1, r.gamma) == multiply(k, s.gamma, g.g3);
}

DeltaMorphism identity(const DeltaRep& r) {
  return {FieldMatrix::identity(r.dims[0]), FieldMatrix::identity(r.dims[1]), FieldMatrix::identity(r.dims[2])};
}

DeltaMorphism zero_morphism(const DeltaRep& r, const DeltaRep& s) {
  return {FieldMatrix(s.dims[0], r.dims[0]), FieldMatrix(s.dims[1], r.dims[1]), FieldMatrix(s.dims[2], r.dims[2])};
}

DeltaMorphism compose(const FiniteField& k, const DeltaMorphism& g, const DeltaMorphism& f) {
  return {multiply(k, g.g1, f.g1), multiply(k, g.g2, f.g2), multiply(k, g.g3, f.g3)};
}

DeltaMorphism add(const FiniteField& k, const DeltaMorphism& f, const DeltaMorphism& g) {
  return {add(k, f.g1, g.g1), add(k, f.g2, g.g2), add(k, f.g3, g.g3)};
}

DeltaMorphism scale(const FiniteField& k, FieldElem s, const DeltaMorphism& f) {
  return {scale(k, s, f.g1), scale(k, s, f.g2), scale(k, s, f.g3)};
}

bool is_isomorphism(const FiniteField& k, const DeltaMorphism& g) {
  return is_invertible(k, g.g1) && is_invertible(k, g.g2) && is_invertible(k, g.g3);
}

std::vector<DeltaMorphism> delta_hom(const DeltaRep& r, const DeltaRep& s) {
  if (!(r.field == s.field)) throw InvalidArgument("representations over different fields");
  const auto& k = r.field;
  const auto [a1, a2, a3] = r.dims;
  const auto [b1, b2, b3] = s.dims;
  const std::size_t n1 = b1 * a1, n2 = b2 * a2, n3 = b3 * a3;
  const std::size_t unknowns = n1 + n2 + n3;
  auto u1 = [&](std::size_t i, std::size_t j) { return i * a1 + j; };
  auto u2 = [&](std::size_t i, std::size_t j) { return n1 + i * a2 + j; };
  auto u3 = [&](std::size_t i, std::size_t j) { return n1 + n2 + i * a3 + j; };

  std::vector<std::vector<FieldElem>> eqs;
  // g1 A − A' g_v = 0 entrywise, for (A, A', v) = (α, α', 2), (β, β', 3), (γ, γ', 3).
  auto add_block = [&](const FieldMatrix& a, const FieldMatrix& as, std::size_t cols, bool via3) {
    for (std::size_t i = 0; i < b1; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::vector<FieldElem> row(unknowns, 0);
        for (std::size_t l = 0; l < a1; ++l) row[u1(i, l)] = k.add(row[u1(i, l)], a(l, j));
        for (std::size_t l = 0; l < as.cols(); ++l) {
          const std::size_t idx = via3 ? u3(l, j) : u2(l, j);
          row[idx] = k.sub(row[idx], as(i, l));
        }
        eqs.push_back(std::move(row));
      }
  };
  add_block(r.alpha, s.alpha, a2, false);
  add_block(r.beta, s.beta, a3, true);
  add_block(r.gamma, s.gamma, a3, true);

  FieldMatrix basis;
  if (eqs.empty())
    basis = FieldMatrix::identity(unknowns);
  else
    basis = nullspace(k, FieldMatrix::from_rows(eqs, unknowns));

  std::vector<DeltaMorphism> out;
  for (std::size_t b = 0; b < basis.rows(); ++b) {
    DeltaMorphism g{FieldMatrix(b1, a1), FieldMatrix(b2, a2), FieldMatrix(b3, a3)};
    for (std::size_t i = 0; i < b1; ++i)
      for (std::size_t j = 0; j < a1; ++j) g.g1(i, j) = basis(b, u1(i, j));
    for (std::size_t i = 0; i < b2; ++i)
      for (std::size_t j = 0; j < a2; ++j) g.g2(i, j) = basis(b, u2(i, j));
    for (std::size_t i = 0; i < b3; ++i)
      for (std::size_t j = 0; j < a3; ++j) g.g3(i, j) = basis(b, u3(i, j));
    out.push_back(std::move(g));
  }
  return out;
}

DeltaMorphism combine(const DeltaRep& r, const DeltaRep& s, const std::vector<DeltaMorphism>& basis,
                      const std::vector<FieldElem>& c) {
  DeltaMorphism g = zero_morphism(r, s);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) g = add(r.field, g, scale(r.field, c[i], basis[i]));
  return g;
}

SummandProfile simple_summand_profile(const DeltaRep& r) {
  const auto& k = r.field;
  SummandProfile p;
  p.s2 = r.dims[1] - rank(k, r.alpha);
  p.s3 = r.dims[2] - rank(k, vstack(r.beta, r.gamma));
  p.s1 = r.dims[0] - rank(k, hstack({&r.alpha, &r.beta, &r.gamma}, r.dims[0]));
  return p;
}

DeltaRep triple_to_rep(const FiniteField& k, const Triple& t) {
  if (t.V.cols() != t.m || t.U.cols() != 2 * t.m) throw InvalidArgument("triple subspaces have wrong ambient dimension");
  const std::size_t dv = t.V.rows(), du = t.U.rows();
  FieldMatrix beta(t.m, du), gamma(t.m, du);
  for (std::size_t j = 0; j < du; ++j)
    for (std::size_t i = 0; i < t.m; ++i) {
      beta(i, j) = t.U(j, i);
      gamma(i, j) = t.U(j, t.m + i);
    }
  return DeltaRep(k, {t.m, dv, du}, t.V.transpose(), std::move(beta), std::move(gamma));
}

Triple rep_to_triple(const DeltaRep& r) {
  const auto p = simple_summand_profile(r);
  if (p.s2 > 0) throw SummandObstruction("S(2)", static_cast<int>(p.s2));
  if (p.s3 > 0) throw SummandObstruction("S(3)", static_cast<int>(p.s3));
  const auto& k = r.field;
  Triple t;
  t.m = r.dims[0];
  t.V = subspace::span(k, r.alpha.transpose());
  t.U = subspace::span(k, vstack(r.beta, r.gamma).transpose());
  return t;
}

IsoResult iso_witness(const DeltaRep& r, const DeltaRep& s, std::uint64_t seed, int random_trials) {
  IsoResult res;
  if (r.dims != s.dims || !(r.field == s.field)) {
    res.conclusive = true;
    return res;
  }
  const auto& k = r.field;
  const auto basis = delta_hom(r, s);
  const std::size_t n = basis.size();
  auto accept = [&](const DeltaMorphism& g) {
    if (is_isomorphism(k, g) && is_morphism(r, s, g)) {
      res.witness = g;
      return true;
    }
    return false;
  };
  if (k.order() <= 3 && n <= 8) {
    std::vector<FieldElem> c(n, 0);
    while (true) {
      if (accept(combine(r, s, basis, c))) return res;
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++c[i] < k.order()) break;
        c[i] = 0;
      }
      if (i == n) break;
    }
    res.conclusive = true;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::vector<FieldElem> c(n);
  for (int trial = 0; trial < random_trials; ++trial) {
    for (auto& x : c) x = static_cast<FieldElem>(rng() % k.order());
    if (accept(combine(r, s, basis, c))) return res;
  }
  return res;
}

}  // namespace chainsub
