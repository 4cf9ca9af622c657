#include "chainsub/subpair.hpp"

#include <algorithm>
#include <numeric>

#include "chainsub/errors.hpp"

namespace chainsub {

SubPair::SubPair(PartitionModule m0, Submodule m1) : M0(std::move(m0)), M1(std::move(m1)) {
  if (!M1.parent().same_shape(M0)) throw ParentMismatch("M1 is not a submodule of M0");
}

SubPair::SubPair(PartitionModule m0, std::vector<RingVector> m1_generators)
    : M0(m0), M1(std::move(m0), std::move(m1_generators)) {}

PairMorphism::PairMorphism(SubPair source, SubPair target, ModMorphism f0)
    : source_(std::move(source)), target_(std::move(target)), f0_(std::move(f0)) {
  if (!f0_.source().same_shape(source_.M0) || !f0_.target().same_shape(target_.M0))
    throw ParentMismatch("pair morphism matrix does not match the ambient modules");
  for (const auto& row : source_.M1.rows())
    if (!target_.M1.contains(f0_.apply(row))) throw ConstraintViolated("morphism does not carry M1 into N1");
}

PairMorphism PairMorphism::identity(const SubPair& m) { return PairMorphism(m, m, ModMorphism::identity(m.M0)); }

PairMorphism PairMorphism::zero(const SubPair& m, const SubPair& n) {
  return PairMorphism(m, n, ModMorphism::zero(m.M0, n.M0));
}

PairMorphism compose(const PairMorphism& g, const PairMorphism& f) {
  return PairMorphism(f.source(), g.target(), compose(g.f0(), f.f0()));
}

PairMorphism add(const PairMorphism& f, const PairMorphism& g) {
  return PairMorphism(f.source(), f.target(), add(f.f0(), g.f0()));
}

PairMorphism scale(RingElement s, const PairMorphism& f) {
  return PairMorphism(f.source(), f.target(), scale(s, f.f0()));
}

HomGroup::HomGroup(SubPair source, SubPair target, Submodule subgroup)
    : source_(std::move(source)),
      target_(std::move(target)),
      coords_(source_.M0, target_.M0),
      subgroup_(std::move(subgroup)) {
  if (!subgroup_.parent().same_shape(coords_.space)) throw ParentMismatch("subgroup is not in the Hom coordinate space");
  const auto dec = decompose(subgroup_);
  orders_ = dec.module.partition();
  for (std::size_t i = 0; i < orders_.size(); ++i)
    generators_.emplace_back(source_, target_, coords_.from_coords(dec.embedding.image_of_generator(i)));
}

bool HomGroup::contains(const ModMorphism& f) const { return subgroup_.contains(coords_.to_coords(f)); }

PairMorphism HomGroup::combination(const RingVector& lambda) const {
  if (lambda.size() != generators_.size()) throw InvalidArgument("one coefficient per generator expected");
  const Ring& r = *source_.ring();
  RingVector c = coords_.space.zero();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    vec::axpy(r, c, lambda[i], coords_.to_coords(generators_[i].f0()), coords_.exps());
  return PairMorphism(source_, target_, coords_.from_coords(c));
}

void HomGroup::for_each(const std::function<void(const PairMorphism&)>& f) const {
  subgroup_.for_each_element(
      [&](const RingVector& c) { f(PairMorphism(source_, target_, coords_.from_coords(c))); });
}

HomGroup hom_pairs(const SubPair& m, const SubPair& n) {
  if (!same_ring(m.ring(), n.ring())) throw RingMismatch();
  const HomCoordinates hc(m.M0, n.M0);
  const auto q = quotient_invariants(n.M0, n.M1);
  const auto& m1 = m.M1.rows();
  const auto& qparts = q.module.partition();
  const std::size_t split = m1.size() * qparts.size();

  std::vector<int> exps;
  for (std::size_t r = 0; r < m1.size(); ++r) exps.insert(exps.end(), qparts.begin(), qparts.end());
  exps.insert(exps.end(), hc.exps().begin(), hc.exps().end());

  // f ↦ (π f(m_r))_r; the kernel is the group of pair morphisms.
  std::vector<RingVector> rows;
  rows.reserve(hc.size());
  for (std::size_t k = 0; k < hc.size(); ++k) {
    RingVector row(split + hc.size());
    if (split > 0) {
      const auto f = hc.generator(k);
      for (std::size_t r = 0; r < m1.size(); ++r) {
        const auto img = q.projection.apply(f.apply(m1[r]));
        std::copy(img.begin(), img.end(), row.begin() + static_cast<std::ptrdiff_t>(r * qparts.size()));
      }
    }
    row[split + k] = m.ring()->one();
    rows.push_back(std::move(row));
  }
  Submodule sub(hc.space, split_kernel(*m.ring(), std::move(rows), exps, split));
  return HomGroup(m, n, std::move(sub));
}

HomGroup hom_through_I(const SubPair& m, const SubPair& n) {
  const SubPair i = canonical_I(m.ring());
  const auto to_i = hom_pairs(m, i);
  const auto from_i = hom_pairs(i, n);
  const HomCoordinates hc(m.M0, n.M0);
  std::vector<RingVector> rows;
  for (const auto& g : from_i.generators())
    for (const auto& h : to_i.generators()) rows.push_back(hc.to_coords(compose(g.f0(), h.f0())));
  return HomGroup(m, n, Submodule(hc.space, std::move(rows)));
}

namespace {

void require_length_7(const RingPtr& ring) {
  if (ring->length() < 7) throw InvalidArgument("I and J need a ring of length at least 7");
}

}  // namespace

SubPair canonical_I(const RingPtr& ring) {
  require_length_7(ring);
  const Ring& r = *ring;
  const PartitionModule i0(ring, {6, 4, 2}, {"a", "b", "c"});
  return SubPair(i0, {i0.element({r.t_pow(3), r.neg(r.t_pow(2)), r.zero()}),
                      i0.element({r.zero(), r.t_pow(2), r.neg(r.t())})});
}

SubPair canonical_J(const RingPtr& ring) {
  require_length_7(ring);
  const Ring& r = *ring;
  const PartitionModule j0(ring, {7, 4, 2}, {"x", "y", "z"});
  return SubPair(j0, {j0.element({r.t_pow(3), r.neg(r.t()), r.zero()}),
                      j0.element({r.zero(), r.t(), r.neg(r.one())})});
}

PairMorphism canonical_inclusion(const RingPtr& ring) {
  const Ring& r = *ring;
  const auto i = canonical_I(ring), j = canonical_J(ring);
  return PairMorphism(i, j,
                      ModMorphism(i.M0, j.M0,
                                  {{r.t(), r.zero(), r.zero()}, {r.zero(), r.one(), r.zero()},
                                   {r.zero(), r.zero(), r.one()}}));
}

PairMorphism DirectSum::injection(std::size_t s, const SubPair& summand) const {
  std::vector<RingVector> mat(pair.M0.rank(), RingVector(summand.M0.rank()));
  for (std::size_t g = 0; g < summand.M0.rank(); ++g) mat[position[s][g]][g] = pair.ring()->one();
  return PairMorphism(summand, pair, ModMorphism(summand.M0, pair.M0, std::move(mat)));
}

PairMorphism DirectSum::projection(std::size_t s, const SubPair& summand) const {
  std::vector<RingVector> mat(summand.M0.rank(), RingVector(pair.M0.rank()));
  for (std::size_t g = 0; g < summand.M0.rank(); ++g) mat[g][position[s][g]] = pair.ring()->one();
  return PairMorphism(pair, summand, ModMorphism(pair.M0, summand.M0, std::move(mat)));
}

DirectSum direct_sum(const std::vector<SubPair>& summands) {
  if (summands.empty()) throw InvalidArgument("direct sum of no objects needs a ring");
  const RingPtr& ring = summands.front().ring();
  struct Slot {
    int part;
    std::size_t s, g;
  };
  std::vector<Slot> slots;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    if (!same_ring(ring, summands[s].ring())) throw RingMismatch();
    for (std::size_t g = 0; g < summands[s].M0.rank(); ++g) slots.push_back({summands[s].M0.partition()[g], s, g});
  }
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.part > b.part; });

  DirectSum out;
  out.position.resize(summands.size());
  for (std::size_t s = 0; s < summands.size(); ++s) out.position[s].resize(summands[s].M0.rank());
  std::vector<int> parts;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto& sl = slots[k];
    out.position[sl.s][sl.g] = k;
    parts.push_back(sl.part);
    labels.push_back(summands[sl.s].M0.labels()[sl.g] + (summands.size() > 1 ? std::to_string(sl.s + 1) : ""));
  }
  const PartitionModule m0(ring, parts, labels);
  std::vector<RingVector> m1;
  for (std::size_t s = 0; s < summands.size(); ++s)
    for (const auto& row : summands[s].M1.rows()) {
      RingVector w = m0.zero();
      for (std::size_t g = 0; g < row.size(); ++g) w[out.position[s][g]] = row[g];
      m1.push_back(std::move(w));
    }
  out.pair = SubPair(m0, std::move(m1));
  return out;
}

SubPair direct_sum(const SubPair& m, const SubPair& n) { return direct_sum(std::vector<SubPair>{m, n}).pair; }

DirectSum power(const SubPair& m, std::size_t r) {
  if (r == 0) {
    DirectSum out;
    out.pair = SubPair(PartitionModule(m.ring(), {}), std::vector<RingVector>{});
    return out;
  }
  return direct_sum(std::vector<SubPair>(r, m));
}

LayerFiltration layers(const SubPair& m) {
  const auto whole = Submodule::whole(m.M0);
  LayerFiltration f;
  f.L[0] = intersect(t_image(whole, 4), s_socle(m.M0, 1));
  f.L[1] = intersect(t_image(whole, 3), s_socle(m.M0, 2));
  for (int i = 3; i <= 6; ++i) f.L[static_cast<std::size_t>(i - 1)] = t_preimage(f.L[1], i - 2);
  return f;
}

ISocle i_socle(const SubPair& m) {
  const auto lay = layers(m);
  ISocle out{lay[6], intersect(m.M1, lay[3]), 0, {}};
  const Ring& r = *m.ring();
  const FiniteField& k = r.residue_field();

  // Tops of the c-summands: (L6 ∩ t^{-2}0) / (tL6 ∩ t^{-2}0).
  const auto soc2 = s_socle(m.M0, 2);
  const Subquotient tops(intersect(out.L6, soc2), intersect(t_image(out.L6, 1), soc2));

  const SubPair i = canonical_I(m.ring());
  const auto from_i = hom_pairs(i, m);
  std::vector<const PairMorphism*> chosen;
  FieldMatrix basis(0, tops.dim());
  for (const auto& h : from_i.generators()) {
    const auto hc = h.f0().image_of_generator(2);
    if (!tops.top().contains(hc)) throw DecompositionFailed("a map from I leaves L6M");
    const auto c = tops.coords(hc);
    auto rows = basis.to_rows();
    rows.push_back(c);
    const auto grown = FieldMatrix::from_rows(rows, tops.dim());
    if (rank(k, grown) > basis.rows()) {
      basis = grown;
      chosen.push_back(&h);
    }
  }
  out.rank = chosen.size();
  const auto ir = power(i, out.rank);
  std::vector<RingVector> images(ir.pair.M0.rank());
  for (std::size_t s = 0; s < out.rank; ++s)
    for (std::size_t g = 0; g < 3; ++g) images[ir.position[s][g]] = chosen[s]->f0().image_of_generator(g);
  out.theta = PairMorphism(ir.pair, m, ModMorphism::from_images(ir.pair.M0, m.M0, images));

  const auto& theta0 = out.theta.f0();
  if (!theta0.kernel().is_zero()) throw DecompositionFailed("the candidate map from I^r is not injective");
  if (theta0.image() != out.L6) throw DecompositionFailed("L6M is not the image of I0^r");
  if (theta0.image(ir.pair.M1) != out.M1L3) throw DecompositionFailed("M1 ∩ L3M is not the image of I1^r");
  return out;
}

namespace frame {

std::vector<FieldElem> kappa1(const Ring& r, std::size_t m, const RingVector& w) {
  std::vector<FieldElem> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = r.residue(r.divmod_t_pow(w[i], 6).first);
  return out;
}

std::vector<FieldElem> kappa2(const Ring& r, std::size_t m, const RingVector& w) {
  std::vector<FieldElem> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = r.residue(w[i]);
  return out;
}

std::vector<FieldElem> kappa3(const Ring& r, std::size_t m, const RingVector& w) {
  std::vector<FieldElem> out(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = r.residue(r.divmod_t_pow(w[i], 3).first);
    out[m + i] = r.residue(w[2 * m + i]);
  }
  return out;
}

RingVector lift_v(const Ring& r, std::size_t m, const std::vector<FieldElem>& v) {
  RingVector w(3 * m);
  for (std::size_t i = 0; i < m; ++i) w[i] = r.lift(v[i]);
  return w;
}

RingVector lift_u(const Ring& r, std::size_t m, const std::vector<FieldElem>& u) {
  RingVector w(3 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const RingElement a = r.lift(u[i]), b = r.lift(u[m + i]);
    w[i] = r.reduce(r.mul_t_pow(a, 3), 7);
    w[m + i] = r.reduce(r.neg(r.mul_t_pow(r.add(a, b), 1)), 4);
    w[2 * m + i] = r.reduce(b, 2);
  }
  return w;
}

}  // namespace frame

FrameImage frame_image(const RingPtr& ring, std::size_t m, const FieldMatrix& V, const FieldMatrix& U) {
  if (V.cols() != m || U.cols() != 2 * m) throw InvalidArgument("frame subspaces have the wrong ambient dimension");
  const Ring& r = *ring;
  const auto jm = power(canonical_J(ring), m).pair;
  std::vector<RingVector> m0, m1;
  for (std::size_t i = 0; i < m; ++i) {
    m0.push_back(jm.M0.t_scale(jm.M0.generator(i), 1));
    m0.push_back(jm.M0.generator(m + i));
    m0.push_back(jm.M0.generator(2 * m + i));
  }
  for (const auto& g : jm.M1.rows()) m1.push_back(jm.M0.t_scale(g, 1));
  for (std::size_t i = 0; i < V.rows(); ++i)
    m0.push_back(frame::lift_v(r, m, {V.row(i).begin(), V.row(i).end()}));
  for (std::size_t i = 0; i < U.rows(); ++i)
    m1.push_back(frame::lift_u(r, m, {U.row(i).begin(), U.row(i).end()}));
  return {Submodule(jm.M0, std::move(m0)), Submodule(jm.M0, std::move(m1))};
}

FramedObject check_interval(const SubPair& mod, std::size_t m) {
  const Ring& r = *mod.ring();
  const FiniteField& k = r.residue_field();
  if (r.length() < 7) throw InvalidArgument("the interval [I, J] needs a ring of length at least 7");
  ISocle soc;
  try {
    soc = i_socle(mod);
  } catch (const DecompositionFailed& e) {
    throw NotInInterval(std::string("I-socle is not a direct sum of copies of I: ") + e.what());
  }
  if (soc.rank != m)
    throw NotInInterval("I-socle has rank " + std::to_string(soc.rank) + ", expected " + std::to_string(m));

  const auto jm_sum = power(canonical_J(mod.ring()), m);
  const SubPair& jm = jm_sum.pair;
  const auto psi_group = hom_pairs(mod, jm);
  const auto& gens = psi_group.generators();

  // Residue matrix of ψ∘θ: z_j-coordinate of the image of c_l, modulo t.
  // I^m is laid out like J^m, so c_l sits at index 2m + l.
  FieldMatrix eqs(m * m, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto comp = compose(gens[g].f0(), soc.theta.f0());
    for (std::size_t l = 0; l < m; ++l) {
      const auto img = comp.image_of_generator(2 * m + l);
      for (std::size_t j = 0; j < m; ++j) eqs(j * m + l, g) = r.residue(img[2 * m + j]);
    }
  }
  std::vector<FieldElem> id(m * m, 0);
  for (std::size_t j = 0; j < m; ++j) id[j * m + j] = 1;
  const auto coeffs = solve(k, eqs, id);
  if (!coeffs) throw NotInInterval("no pair morphism into J^m restricts to an isomorphism onto I^m");

  RingVector lambda(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) lambda[g] = r.lift((*coeffs)[g]);
  const auto psi = psi_group.combination(lambda);
  if (!psi.f0().kernel().is_zero()) throw NotInInterval("frame map into J^m is not injective");

  FramedObject out;
  out.m = m;
  std::vector<std::vector<FieldElem>> vrows, urows;
  for (std::size_t g = 0; g < mod.M0.rank(); ++g) vrows.push_back(frame::kappa2(r, m, psi.f0().image_of_generator(g)));
  for (const auto& row : mod.M1.rows()) urows.push_back(frame::kappa3(r, m, psi.f0().apply(row)));
  out.V = subspace::span(k, FieldMatrix::from_rows(vrows, m));
  out.U = subspace::span(k, FieldMatrix::from_rows(urows, 2 * m));
  const auto expected = frame_image(mod.ring(), m, out.V, out.U);
  if (psi.f0().image() != expected.M0) throw NotInInterval("image of M0 is not I0^m plus lifts of V");
  if (psi.f0().image(mod.M1) != expected.M1) throw NotInInterval("image of M1 is not I1^m plus lifts of U");
  out.realized = mod;
  out.frame = psi;
  return out;
}

}  // namespace chainsub
