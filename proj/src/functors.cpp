#include "chainsub/functors.hpp"

#include "chainsub/errors.hpp"

namespace chainsub {

namespace {

RingMatrix matrix_of(const PartitionModule& m, std::vector<RingVector> rows) {
  return RingMatrix::from_rows(m.ring(), std::move(rows), m.rank(), m.partition());
}

RingVector neg(const PartitionModule& m, const RingVector& v) { return m.sub(m.zero(), v); }

RingVector combination(const PartitionModule& m, const std::vector<RingVector>& rows, const RingVector& x,
                       std::size_t count) {
  RingVector out = m.zero();
  for (std::size_t i = 0; i < count; ++i) vec::axpy(*m.ring(), out, x[i], rows[i], m.partition());
  return out;
}

RingVector preimage_or_throw(const ModMorphism& f, const RingVector& v) {
  auto x = preimage_of(f, v);
  if (!x) throw InternalInconsistency("frame element has no preimage");
  return *x;
}

std::vector<FieldElem> row_vec(const FieldMatrix& m, std::size_t i) { return {m.row(i).begin(), m.row(i).end()}; }

}  // namespace

GammaPrime::GammaPrime(const SubPair& m) : m0_(m.M0), layers_(chainsub::layers(m)) {
  t2l5_ = t_image(layers_[5], 2);
  m1l3_ = intersect(m.M1, layers_[3]);
  t3l6_ = t_image(layers_[6], 3);
}

RingVector GammaPrime::first_step(const RingVector& c) const {
  // Find y ∈ t²L5M with t·y = −t²c; then c′ = tc + y.
  const auto& s = t2l5_.rows();
  std::vector<RingVector> rows;
  for (const auto& v : s) rows.push_back(m0_.t_scale(v, 1));
  const auto sol = solve_linear(matrix_of(m0_, std::move(rows)), neg(m0_, m0_.t_scale(c, 2)));
  if (!sol) throw InternalInconsistency("(tc + t²L5M) ∩ t⁻¹0 is empty");
  return m0_.add(m0_.t_scale(c, 1), combination(m0_, s, sol->particular, s.size()));
}

RingVector GammaPrime::second_step(const RingVector& c1) const {
  // Find s ∈ M1 ∩ L3M and w ∈ t³L6M with s − w = −c′; then c″ = c′ + s.
  const auto& a = m1l3_.rows();
  std::vector<RingVector> rows = a;
  rows.insert(rows.end(), t3l6_.rows().begin(), t3l6_.rows().end());
  const auto sol = solve_linear(matrix_of(m0_, std::move(rows)), neg(m0_, c1));
  if (!sol) throw InternalInconsistency("(c′ + M1 ∩ L3M) ∩ t³L6M is empty");
  return m0_.add(c1, combination(m0_, a, sol->particular, a.size()));
}

RingVector GammaPrime::operator()(const RingVector& c) const {
  const auto x = m0_.element(c);
  if (!layers_[4].contains(x)) throw PreconditionViolated("γ′ is defined on L4M only");
  return m0_.t_scale(second_step(first_step(x)), 2);
}

RingVector gamma_prime(const FramedObject& m, const RingVector& c) { return GammaPrime(m.realized)(c); }

FrameCoordinates::FrameCoordinates(const FramedObject& m) : obj_(m) {
  const Ring& r = m.ring();
  const auto& psi = m.frame.f0();
  for (std::size_t i = 0; i < m.m; ++i) {
    RingVector w(3 * m.m);
    w[i] = r.t_pow(6);
    lifts_[0].push_back(preimage_or_throw(psi, w));
  }
  for (std::size_t i = 0; i < m.V.rows(); ++i)
    lifts_[1].push_back(preimage_or_throw(psi, frame::lift_v(r, m.m, row_vec(m.V, i))));
  for (std::size_t i = 0; i < m.U.rows(); ++i)
    lifts_[2].push_back(preimage_or_throw(psi, frame::lift_u(r, m.m, row_vec(m.U, i))));
}

std::vector<FieldElem> FrameCoordinates::coords(int vertex, const RingVector& x) const {
  const Ring& r = obj_.ring();
  const auto w = obj_.frame.f0().apply(x);
  switch (vertex) {
    case 1:
      return frame::kappa1(r, obj_.m, w);
    case 2:
      return subspace::coordinates(obj_.field(), obj_.V, frame::kappa2(r, obj_.m, w));
    case 3:
      return subspace::coordinates(obj_.field(), obj_.U, frame::kappa3(r, obj_.m, w));
    default:
      throw InvalidArgument("vertex must be 1, 2 or 3");
  }
}

DeltaRep F_object(const FramedObject& m) {
  const FrameCoordinates fc(m);
  const GammaPrime gp(m.realized);
  const auto& m0 = m.realized.M0;
  const std::array<std::size_t, 3> dims{fc.dim(1), fc.dim(2), fc.dim(3)};
  FieldMatrix alpha(dims[0], dims[1]), beta(dims[0], dims[2]), gamma(dims[0], dims[2]);
  for (std::size_t j = 0; j < dims[1]; ++j) {
    const auto a = fc.coords(1, m0.t_scale(fc.lift(2, j), 6));
    for (std::size_t i = 0; i < dims[0]; ++i) alpha(i, j) = a[i];
  }
  for (std::size_t j = 0; j < dims[2]; ++j) {
    const auto b = fc.coords(1, m0.t_scale(fc.lift(3, j), 3));
    const auto g = fc.coords(1, gp(fc.lift(3, j)));
    for (std::size_t i = 0; i < dims[0]; ++i) {
      beta(i, j) = b[i];
      gamma(i, j) = g[i];
    }
  }
  return DeltaRep(m.field(), dims, std::move(alpha), std::move(beta), std::move(gamma));
}

DeltaMorphism F_morphism(const FramedObject& source, const FramedObject& target, const PairMorphism& f) {
  const FrameCoordinates s(source), t(target);
  std::array<FieldMatrix, 3> g;
  for (int v = 1; v <= 3; ++v) {
    FieldMatrix mat(t.dim(v), s.dim(v));
    for (std::size_t j = 0; j < s.dim(v); ++j) {
      const auto c = t.coords(v, f.f0().apply(s.lift(v, j)));
      for (std::size_t i = 0; i < t.dim(v); ++i) mat(i, j) = c[i];
    }
    g[static_cast<std::size_t>(v - 1)] = std::move(mat);
  }
  return {g[0], g[1], g[2]};
}

FramedObject Phi_object(const RingPtr& ring, const Triple& t) {
  const FiniteField& k = ring->residue_field();
  if (t.V.cols() != t.m || t.U.cols() != 2 * t.m) throw InvalidArgument("triple subspaces have the wrong ambient dimension");
  FramedObject out;
  out.m = t.m;
  out.V = subspace::span(k, t.V);
  out.U = subspace::span(k, t.U);
  const auto img = frame_image(ring, t.m, out.V, out.U);
  const auto dec = decompose(img.M0);
  out.realized = SubPair(dec.module, dec.embedding.preimage(img.M1));
  out.frame = PairMorphism(out.realized, power(canonical_J(ring), t.m).pair, dec.embedding);
  return out;
}

std::vector<RingVector> canonical_lift(const Ring& r, const FieldMatrix& g) {
  std::vector<RingVector> out(g.rows(), RingVector(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = r.lift(g(i, j));
  return out;
}

PairMorphism Phi_morphism(const FieldMatrix& g, const FramedObject& source, const FramedObject& target,
                          const std::optional<std::vector<RingVector>>& lift) {
  const Ring& r = source.ring();
  const FiniteField& k = r.residue_field();
  const std::size_t m = source.m, n = target.m;
  if (g.rows() != n || g.cols() != m) throw InvalidArgument("frame map has the wrong shape");
  for (std::size_t i = 0; i < source.V.rows(); ++i)
    if (!subspace::contains(k, target.V, apply(k, g, source.V.row(i))))
      throw ConstraintViolated("g does not carry V into V′");
  for (std::size_t i = 0; i < source.U.rows(); ++i) {
    const auto u = source.U.row(i);
    auto w = apply(k, g, u.subspan(0, m));
    const auto w2 = apply(k, g, u.subspan(m, m));
    w.insert(w.end(), w2.begin(), w2.end());
    if (!subspace::contains(k, target.U, w)) throw ConstraintViolated("g ⊕ g does not carry U into U′");
  }

  const auto G = lift ? *lift : canonical_lift(r, g);
  if (G.size() != n) throw InvalidArgument("lift has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    if (G[i].size() != m) throw InvalidArgument("lift has the wrong shape");
    for (std::size_t j = 0; j < m; ++j)
      if (r.residue(G[i][j]) != g(i, j)) throw InvalidArgument("lift does not reduce to g");
  }

  // g̃ ⊗ 1 acts blockwise on the x, y and z coordinates of J^m.
  const std::array<int, 3> parts{7, 4, 2};
  const auto tilde = [&](const RingVector& w) {
    RingVector out(3 * n);
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        RingElement s = r.zero();
        for (std::size_t j = 0; j < m; ++j) s = r.add(s, r.mul(G[i][j], w[b * m + j]));
        out[b * n + i] = r.reduce(s, parts[b]);
      }
    return out;
  };
  const auto& src = source.realized.M0;
  std::vector<RingVector> images;
  for (std::size_t j = 0; j < src.rank(); ++j)
    images.push_back(preimage_or_throw(target.frame.f0(), tilde(source.frame.f0().image_of_generator(j))));
  return PairMorphism(source.realized, target.realized, ModMorphism::from_images(src, target.realized.M0, images));
}

TwoMatrixModule::TwoMatrixModule(FiniteField k, FieldMatrix x, FieldMatrix y)
    : field(std::move(k)), d(x.rows()), X(std::move(x)), Y(std::move(y)) {
  if (X.cols() != d || Y.rows() != d || Y.cols() != d) throw InvalidArgument("X and Y must be square of equal size");
}

Embedding G_embed(const TwoMatrixModule& v) {
  const std::size_t d = v.d;
  FieldMatrix alpha(2 * d, d), gamma(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    alpha(i, i) = 1;
    gamma(d + i, i) = 1;
    for (std::size_t j = 0; j < d; ++j) {
      gamma(i, d + j) = v.X(i, j);
      gamma(d + i, d + j) = v.Y(i, j);
    }
  }
  Embedding out;
  out.rep = DeltaRep(v.field, {2 * d, d, 2 * d}, alpha, FieldMatrix::identity(2 * d), gamma);

  // U_XY = {(v1, v2 | Xv2, v1 + Yv2)}.
  FieldMatrix V(d, 2 * d), U(2 * d, 4 * d);
  for (std::size_t i = 0; i < d; ++i) {
    V(i, i) = 1;
    U(i, i) = 1;
    U(i, 3 * d + i) = 1;
    U(d + i, d + i) = 1;
    for (std::size_t j = 0; j < d; ++j) {
      U(d + i, 2 * d + j) = v.X(j, i);
      U(d + i, 3 * d + j) = v.Y(j, i);
    }
  }
  out.triple = Triple{2 * d, subspace::span(v.field, V), subspace::span(v.field, U)};
  return out;
}

std::vector<FieldMatrix> commutant_oracle(const TwoMatrixModule& v, const TwoMatrixModule& w) {
  if (!(v.field == w.field)) throw InvalidArgument("modules over different fields");
  const FiniteField& k = v.field;
  const std::size_t d = v.d, e = w.d;
  // Unknown f(a, b) at index a·d + b; one equation per entry of fX − X′f and fY − Y′f.
  FieldMatrix eqs(2 * e * d, e * d);
  std::size_t row = 0;
  for (const auto& [A, B] : {std::pair{&v.X, &w.X}, std::pair{&v.Y, &w.Y}})
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t c = 0; c < d; ++c, ++row) {
        for (std::size_t b = 0; b < d; ++b) eqs(row, a * d + b) = k.add(eqs(row, a * d + b), (*A)(b, c));
        for (std::size_t b = 0; b < e; ++b) eqs(row, b * d + c) = k.sub(eqs(row, b * d + c), (*B)(a, b));
      }
  const auto ns = nullspace(k, eqs);
  std::vector<FieldMatrix> out;
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    FieldMatrix f(e, d);
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t b = 0; b < d; ++b) f(a, b) = ns(s, a * d + b);
    out.push_back(std::move(f));
  }
  return out;
}

KAlgebra::KAlgebra(FiniteField k, std::vector<std::string> labels,
                   std::vector<std::vector<std::vector<FieldElem>>> constants, std::vector<FieldElem> unit)
    : k_(std::move(k)), labels_(std::move(labels)), c_(std::move(constants)), unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (c_.size() != n || unit_.size() != n) throw InvalidArgument("structure constants have the wrong shape");
  for (const auto& row : c_) {
    if (row.size() != n) throw InvalidArgument("structure constants have the wrong shape");
    for (const auto& v : row)
      if (v.size() != n) throw InvalidArgument("structure constants have the wrong shape");
  }
  const auto e = [n](std::size_t i) {
    std::vector<FieldElem> v(n, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (multiply(unit_, e(i)) != e(i) || multiply(e(i), unit_) != e(i))
      throw InvalidArgument("unit axiom fails for basis element " + labels_[i]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (multiply(c_[i][j], e(l)) != multiply(e(i), c_[j][l]))
          throw InvalidArgument("structure constants are not associative");
  }
}

std::vector<FieldElem> KAlgebra::multiply(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const {
  const std::size_t n = dim();
  std::vector<FieldElem> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElem s = k_.mul(a[i], b[j]);
      if (s == 0) continue;
      for (std::size_t l = 0; l < n; ++l) out[l] = k_.add(out[l], k_.mul(s, c_[i][j][l]));
    }
  }
  return out;
}

namespace {

std::vector<std::string> basis_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

/// Solves P x = v for a square invertible P.
std::vector<FieldElem> solve_in_basis(const FiniteField& k, const FieldMatrix& p, const std::vector<FieldElem>& v) {
  auto x = solve(k, p, v);
  if (!x) throw InvalidArgument("element is outside the span of the basis");
  return *x;
}

}  // namespace

KAlgebra matrix_algebra(const FiniteField& k, const std::vector<FieldMatrix>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) return KAlgebra(k, {}, {}, {});
  const std::size_t d = basis[0].rows();
  const auto flat = [](const FieldMatrix& a) {
    std::vector<FieldElem> v;
    for (std::size_t i = 0; i < a.rows(); ++i) v.insert(v.end(), a.row(i).begin(), a.row(i).end());
    return v;
  };
  FieldMatrix p(d * d, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = flat(basis[j]);
    for (std::size_t i = 0; i < v.size(); ++i) p(i, j) = v[i];
  }
  if (rank(k, p) != n) throw InvalidArgument("matrices are linearly dependent");
  std::vector<std::vector<std::vector<FieldElem>>> c(n, std::vector<std::vector<FieldElem>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = solve_in_basis(k, p, flat(multiply(k, basis[i], basis[j])));
  return KAlgebra(k, basis_labels(n), std::move(c), solve_in_basis(k, p, flat(FieldMatrix::identity(d))));
}

EndQuotient::EndQuotient(const FramedObject& m)
    : end_(hom_pairs(m.realized, m.realized)), ideal_(hom_through_I(m.realized, m.realized)) {
  const auto& hc = end_.coordinates();
  for (const auto& g : end_.generators())
    if (!ideal_.subgroup().contains(hc.space.t_scale(hc.to_coords(g.f0()), 1)))
      throw NotKAlgebra("t does not annihilate End(M)/End(M)_I");
  quotient_.emplace(end_.subgroup(), ideal_.subgroup());
  const std::size_t n = quotient_->dim();
  for (std::size_t i = 0; i < n; ++i)
    basis_.emplace_back(m.realized, m.realized, hc.from_coords(quotient_->basis_lift(i)));
  std::vector<std::vector<std::vector<FieldElem>>> c(n, std::vector<std::vector<FieldElem>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = coords(compose(basis_[i], basis_[j]));
  algebra_ = KAlgebra(m.field(), basis_labels(n), std::move(c), coords(PairMorphism::identity(m.realized)));
}

std::vector<FieldElem> EndQuotient::coords(const PairMorphism& f) const {
  return quotient_->coords(end_.coordinates().to_coords(f.f0()));
}

KAlgebra EndQuotient::algebra_on(const std::vector<PairMorphism>& basis) const {
  const FiniteField& k = algebra_.field();
  const std::size_t n = quotient_->dim();
  if (basis.size() != n) throw InvalidArgument("basis has the wrong number of elements");
  FieldMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = coords(basis[j]);
    for (std::size_t i = 0; i < n; ++i) p(i, j) = v[i];
  }
  if (!is_invertible(k, p)) throw InvalidArgument("classes do not form a basis of the quotient");
  std::vector<std::vector<std::vector<FieldElem>>> c(n, std::vector<std::vector<FieldElem>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = solve_in_basis(k, p, coords(compose(basis[i], basis[j])));
  return KAlgebra(k, basis_labels(n), std::move(c), solve_in_basis(k, p, algebra_.unit()));
}

KAlgebra end_quotient(const FramedObject& m) { return EndQuotient(m).algebra(); }

}  // namespace chainsub
