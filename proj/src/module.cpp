#include "chainsub/module.hpp"

#include <algorithm>
#include <numeric>

#include "chainsub/errors.hpp"

namespace chainsub {

namespace {

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

RingVector concat(const RingVector& a, const RingVector& b) {
  RingVector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_same_parent(const Submodule& u, const Submodule& v) {
  if (!u.parent().same_shape(v.parent())) throw ParentMismatch("submodules live in different modules");
}

std::vector<std::size_t> descending_order(const std::vector<int>& d) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  return idx;
}

}  // namespace

PartitionModule::PartitionModule(RingPtr ring, std::vector<int> partition, std::vector<std::string> labels)
    : ring_(std::move(ring)), parts_(std::move(partition)), labels_(std::move(labels)) {
  if (!ring_) throw InvalidArgument("module needs a ring");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || parts_[i] > ring_->length())
      throw InvalidArgument("partition part " + std::to_string(parts_[i]) + " outside [1, n]");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition must be sorted descending");
  }
  if (labels_.empty())
    for (std::size_t i = 0; i < parts_.size(); ++i) labels_.push_back("x" + std::to_string(i + 1));
  if (labels_.size() != parts_.size()) throw InvalidArgument("label count does not match partition length");
}

int PartitionModule::log_size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

RingVector PartitionModule::generator(std::size_t i) const {
  RingVector v(parts_.size());
  v.at(i) = ring_->one();
  return v;
}

RingVector PartitionModule::element(RingVector coords) const {
  if (coords.size() != parts_.size()) throw InvalidArgument("element has wrong number of coordinates");
  vec::reduce(*ring_, coords, parts_);
  return coords;
}

bool PartitionModule::is_reduced(const RingVector& v) const {
  if (v.size() != parts_.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != ring_->reduce(v[i], parts_[i])) return false;
  return true;
}

bool PartitionModule::same_shape(const PartitionModule& o) const {
  return parts_ == o.parts_ && ring_ && o.ring_ && same_ring(ring_, o.ring_);
}

Submodule::Submodule(PartitionModule parent, std::vector<RingVector> generators) : parent_(std::move(parent)) {
  for (const auto& g : generators)
    if (g.size() != parent_.rank()) throw InvalidArgument("generator has wrong number of coordinates");
  rows_ = howell_rows(*parent_.ring(), std::move(generators), parent_.partition());
}

Submodule Submodule::whole(PartitionModule parent) {
  std::vector<RingVector> gens;
  for (std::size_t i = 0; i < parent.rank(); ++i) gens.push_back(parent.generator(i));
  return Submodule(std::move(parent), std::move(gens));
}

RingVector Submodule::reduce(RingVector v) const {
  v = parent_.element(std::move(v));
  return howell_reduce(ring(), rows_, std::move(v), parent_.partition());
}

bool Submodule::contains(const RingVector& v) const { return vec::is_zero(reduce(v)); }

bool Submodule::is_subset_of(const Submodule& o) const {
  require_same_parent(*this, o);
  return std::all_of(rows_.begin(), rows_.end(), [&](const RingVector& r) { return o.contains(r); });
}

std::vector<int> Submodule::orders() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    const std::size_t c = pivot_column(row);
    out.push_back(parent_.partition()[c] - ring().val(row[c]));
  }
  return out;
}

int Submodule::log_size() const {
  const auto o = orders();
  return std::accumulate(o.begin(), o.end(), 0);
}

void Submodule::for_each_element(const std::function<void(const RingVector&)>& f) const {
  const auto ord = orders();
  const Ring& r = ring();
  std::vector<std::uint64_t> lambda(rows_.size(), 0);
  while (true) {
    RingVector x = parent_.zero();
    for (std::size_t i = 0; i < rows_.size(); ++i)
      vec::axpy(r, x, {lambda[i]}, rows_[i], parent_.partition());
    f(x);
    std::size_t i = 0;
    for (; i < lambda.size(); ++i) {
      if (++lambda[i] < r.count(ord[i])) break;
      lambda[i] = 0;
    }
    if (i == lambda.size()) return;
  }
}

bool Submodule::operator==(const Submodule& o) const { return parent_.same_shape(o.parent_) && rows_ == o.rows_; }

Submodule submodule_from_generators(const PartitionModule& m, std::vector<RingVector> gens) {
  return Submodule(m, std::move(gens));
}

Submodule sum(const Submodule& u, const Submodule& v) {
  require_same_parent(u, v);
  std::vector<RingVector> rows(u.rows());
  rows.insert(rows.end(), v.rows().begin(), v.rows().end());
  return Submodule(u.parent(), std::move(rows));
}

Submodule intersect(const Submodule& u, const Submodule& v) {
  require_same_parent(u, v);
  const auto& parts = u.parent().partition();
  const std::size_t m = parts.size();
  std::vector<RingVector> rows;
  for (const auto& a : u.rows()) rows.push_back(concat(a, a));
  for (const auto& b : v.rows()) rows.push_back(concat(b, RingVector(m)));
  return Submodule(u.parent(), split_kernel(u.ring(), std::move(rows), concat(parts, parts), m));
}

Submodule t_image(const Submodule& u, int s) {
  std::vector<RingVector> rows;
  for (const auto& a : u.rows()) rows.push_back(u.parent().t_scale(a, s));
  return Submodule(u.parent(), std::move(rows));
}

Submodule t_preimage(const Submodule& u, int s) {
  const auto& parent = u.parent();
  const auto& parts = parent.partition();
  const std::size_t m = parts.size();
  std::vector<RingVector> rows;
  for (std::size_t j = 0; j < m; ++j) {
    const RingVector e = parent.generator(j);
    rows.push_back(concat(parent.t_scale(e, s), e));
  }
  for (const auto& a : u.rows()) rows.push_back(concat(a, RingVector(m)));
  return Submodule(parent, split_kernel(u.ring(), std::move(rows), concat(parts, parts), m));
}

Submodule s_socle(const PartitionModule& m, int s) { return t_preimage(Submodule::zero(m), s); }

ModMorphism::ModMorphism(PartitionModule source, PartitionModule target, std::vector<RingVector> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_ring(source_.ring(), target_.ring())) throw RingMismatch("morphism between modules over different rings");
  const Ring& r = *source_.ring();
  if (matrix_.size() != target_.rank()) throw InvalidArgument("morphism matrix needs one row per target generator");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != source_.rank()) throw InvalidArgument("morphism matrix needs one column per source generator");
    const int b = target_.partition()[i];
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      auto& f = matrix_[i][j];
      f = r.reduce(f, b);
      if (f.code != 0 && r.val(f) < b - source_.partition()[j])
        throw InvalidArgument("morphism entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") violates t^a f = 0 mod t^b");
    }
  }
}

ModMorphism ModMorphism::zero(PartitionModule source, PartitionModule target) {
  const std::size_t rows = target.rank(), cols = source.rank();
  return ModMorphism(std::move(source), std::move(target), std::vector<RingVector>(rows, RingVector(cols)));
}

ModMorphism ModMorphism::identity(PartitionModule m) {
  std::vector<RingVector> mat(m.rank(), RingVector(m.rank()));
  for (std::size_t i = 0; i < m.rank(); ++i) mat[i][i] = m.ring()->one();
  return ModMorphism(m, m, std::move(mat));
}

ModMorphism ModMorphism::from_images(PartitionModule source, PartitionModule target,
                                     const std::vector<RingVector>& images) {
  if (images.size() != source.rank()) throw InvalidArgument("need one image per source generator");
  std::vector<RingVector> mat(target.rank(), RingVector(source.rank()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].size() != target.rank()) throw InvalidArgument("image has wrong number of coordinates");
    for (std::size_t i = 0; i < target.rank(); ++i) mat[i][j] = images[j][i];
  }
  return ModMorphism(std::move(source), std::move(target), std::move(mat));
}

RingVector ModMorphism::apply(const RingVector& v) const {
  if (v.size() != source_.rank()) throw InvalidArgument("element does not belong to the morphism source");
  const Ring& r = *source_.ring();
  RingVector out(target_.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    RingElement acc = r.zero();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j].code != 0 && matrix_[i][j].code != 0) acc = r.add(acc, r.mul(matrix_[i][j], v[j]));
    out[i] = r.reduce(acc, target_.partition()[i]);
  }
  return out;
}

RingVector ModMorphism::image_of_generator(std::size_t j) const {
  RingVector out(target_.rank());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = matrix_[i][j];
  return out;
}

Submodule ModMorphism::image(const Submodule& u) const {
  if (!u.parent().same_shape(source_)) throw ParentMismatch("submodule is not in the morphism source");
  std::vector<RingVector> gens;
  for (const auto& row : u.rows()) gens.push_back(apply(row));
  return Submodule(target_, std::move(gens));
}

Submodule ModMorphism::image() const {
  std::vector<RingVector> gens;
  for (std::size_t j = 0; j < source_.rank(); ++j) gens.push_back(image_of_generator(j));
  return Submodule(target_, std::move(gens));
}

Submodule ModMorphism::preimage(const Submodule& w) const {
  if (!w.parent().same_shape(target_)) throw ParentMismatch("submodule is not in the morphism target");
  const std::size_t b = target_.rank();
  std::vector<RingVector> rows;
  for (std::size_t j = 0; j < source_.rank(); ++j) rows.push_back(concat(image_of_generator(j), source_.generator(j)));
  for (const auto& row : w.rows()) rows.push_back(concat(row, RingVector(source_.rank())));
  return Submodule(source_, split_kernel(*source_.ring(), std::move(rows),
                                                concat(target_.partition(), source_.partition()), b));
}

Submodule ModMorphism::kernel() const { return preimage(Submodule::zero(target_)); }

bool ModMorphism::is_zero() const {
  return std::all_of(matrix_.begin(), matrix_.end(), [](const RingVector& r) { return vec::is_zero(r); });
}

ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
  if (!g.source().same_shape(f.target())) throw ParentMismatch("morphisms are not composable");
  const Ring& r = *f.source().ring();
  const std::size_t rows = g.target().rank(), cols = f.source().rank(), mid = f.target().rank();
  std::vector<RingVector> mat(rows, RingVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      const RingElement a = g(i, k);
      if (a.code == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (f(k, j).code != 0) mat[i][j] = r.add(mat[i][j], r.mul(a, f(k, j)));
    }
  return ModMorphism(f.source(), g.target(), std::move(mat));
}

ModMorphism add(const ModMorphism& f, const ModMorphism& g) {
  if (!f.source().same_shape(g.source()) || !f.target().same_shape(g.target()))
    throw ParentMismatch("morphisms have different source or target");
  const Ring& r = *f.source().ring();
  std::vector<RingVector> mat(f.matrix());
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (std::size_t j = 0; j < mat[i].size(); ++j) mat[i][j] = r.add(mat[i][j], g(i, j));
  return ModMorphism(f.source(), f.target(), std::move(mat));
}

ModMorphism scale(RingElement s, const ModMorphism& f) {
  const Ring& r = *f.source().ring();
  std::vector<RingVector> mat(f.matrix());
  for (auto& row : mat)
    for (auto& x : row) x = r.mul(s, x);
  return ModMorphism(f.source(), f.target(), std::move(mat));
}

HomCoordinates::HomCoordinates(PartitionModule s, PartitionModule t) : source(std::move(s)), target(std::move(t)) {
  if (!same_ring(source.ring(), target.ring())) throw RingMismatch("Hom between modules over different rings");
  std::vector<int> exps;
  for (std::size_t i = 0; i < target.rank(); ++i)
    for (std::size_t j = 0; j < source.rank(); ++j) {
      entry.emplace_back(i, j);
      exps.push_back(std::min(source.partition()[j], target.partition()[i]));
    }
  std::vector<std::size_t> idx(entry.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return exps[a] > exps[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> sorted_entry;
  std::vector<int> sorted_exps;
  for (auto k : idx) {
    sorted_entry.push_back(entry[k]);
    sorted_exps.push_back(exps[k]);
  }
  entry = std::move(sorted_entry);
  space = PartitionModule(source.ring(), std::move(sorted_exps));
}

RingVector HomCoordinates::to_coords(const ModMorphism& f) const {
  const Ring& r = *source.ring();
  RingVector c(entry.size());
  for (std::size_t k = 0; k < entry.size(); ++k) {
    const auto [i, j] = entry[k];
    const int shift = std::max(0, target.partition()[i] - source.partition()[j]);
    c[k] = r.reduce(r.divmod_t_pow(f(i, j), shift).first, exps()[k]);
  }
  return c;
}

ModMorphism HomCoordinates::from_coords(const RingVector& c) const {
  const Ring& r = *source.ring();
  std::vector<RingVector> mat(target.rank(), RingVector(source.rank()));
  for (std::size_t k = 0; k < entry.size(); ++k) {
    const auto [i, j] = entry[k];
    const int shift = std::max(0, target.partition()[i] - source.partition()[j]);
    mat[i][j] = r.mul_t_pow(c[k], shift);
  }
  return ModMorphism(source, target, std::move(mat));
}

ModMorphism HomCoordinates::generator(std::size_t k) const {
  RingVector c(entry.size());
  c[k] = source.ring()->one();
  return from_coords(c);
}

int ModHomGroup::log_size() const { return std::accumulate(orders.begin(), orders.end(), 0); }

ModHomGroup hom_group(const PartitionModule& m, const PartitionModule& n) {
  const HomCoordinates hc(m, n);
  ModHomGroup out;
  for (std::size_t k = 0; k < hc.size(); ++k) out.generators.push_back(hc.generator(k));
  out.orders = hc.exps();
  return out;
}

Quotient quotient_invariants(const PartitionModule& m, const Submodule& u) {
  if (!u.parent().same_shape(m)) throw ParentMismatch("submodule is not in the given module");
  const Ring& r = *m.ring();
  const auto& parts = m.partition();
  std::vector<RingVector> rel(u.rows());
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (parts[j] < r.length()) {
      RingVector e(parts.size());
      e[j] = r.t_pow(parts[j]);
      rel.push_back(std::move(e));
    }
  const auto s = smith_form(r, std::move(rel), parts.size());

  const auto order = descending_order(s.exps);
  std::vector<int> qparts;
  for (auto i : order) qparts.push_back(s.exps[i]);
  PartitionModule qm(m.ring(), qparts);
  std::vector<RingVector> proj(order.size(), RingVector(parts.size()));
  std::vector<RingVector> lifts;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < parts.size(); ++j) proj[k][j] = s.col_transform(j, order[k]);
    lifts.push_back(m.element(s.col_transform_inv.row(order[k])));
  }
  return {qm, ModMorphism(m, qm, std::move(proj)), std::move(lifts)};
}

Decomposition decompose(const Submodule& u) {
  const PartitionModule& parent = u.parent();
  const Ring& r = u.ring();
  const auto& h = u.rows();
  if (h.empty()) {
    PartitionModule zero(parent.ring(), {});
    return {zero, ModMorphism::zero(zero, parent)};
  }
  const auto a = RingMatrix::from_rows(parent.ring(), h, parent.rank(), parent.partition());
  const auto sol = solve_linear(a, parent.zero());
  const auto s = smith_form(r, sol->kernel, h.size());

  const auto order = descending_order(s.exps);
  std::vector<int> parts;
  std::vector<RingVector> gens;
  for (auto i : order) {
    parts.push_back(s.exps[i]);
    RingVector g = parent.zero();
    for (std::size_t k = 0; k < h.size(); ++k) vec::axpy(r, g, s.col_transform_inv(i, k), h[k], parent.partition());
    gens.push_back(std::move(g));
  }
  PartitionModule pm(parent.ring(), parts);
  return {pm, ModMorphism::from_images(pm, parent, gens)};
}

std::optional<RingVector> preimage_of(const ModMorphism& injective, const RingVector& v) {
  const auto& src = injective.source();
  if (src.rank() == 0) {
    if (vec::is_zero(v)) return RingVector{};
    return std::nullopt;
  }
  std::vector<RingVector> rows;
  for (std::size_t j = 0; j < src.rank(); ++j) rows.push_back(injective.image_of_generator(j));
  const auto a = RingMatrix::from_rows(src.ring(), std::move(rows), injective.target().rank(),
                                       injective.target().partition());
  const auto sol = solve_linear(a, injective.target().element(v), src.partition());
  if (!sol) return std::nullopt;
  return src.element(sol->particular);
}

Subquotient::Subquotient(const Submodule& a, const Submodule& b) : a_(a), b_(b) {
  if (!b.is_subset_of(a)) throw PreconditionViolated("subquotient bottom is not contained in the top");
  dec_ = decompose(a);
  quotient_ = quotient_invariants(dec_.module, dec_.embedding.preimage(b));
  for (int part : quotient_.module.partition())
    if (part != 1) throw PreconditionViolated("subquotient is not annihilated by t");
  for (const auto& l : quotient_.lifts) lifts_.push_back(dec_.embedding.apply(l));
}

std::vector<FieldElem> Subquotient::coords(const RingVector& x) const {
  const auto y = preimage_of(dec_.embedding, x);
  if (!y) throw PreconditionViolated("element is not in the subquotient top");
  const auto z = quotient_.projection.apply(*y);
  std::vector<FieldElem> out;
  out.reserve(z.size());
  for (auto e : z) out.push_back(a_.ring().residue(e));
  return out;
}

RingVector Subquotient::lift(const std::vector<FieldElem>& c) const {
  if (c.size() != dim()) throw InvalidArgument("coordinate vector has wrong dimension");
  const Ring& r = a_.ring();
  RingVector x = a_.parent().zero();
  for (std::size_t i = 0; i < c.size(); ++i) vec::axpy(r, x, r.lift(c[i]), lifts_[i], a_.parent().partition());
  return x;
}

}  // namespace chainsub
