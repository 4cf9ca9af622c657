#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chainsub/ring_matrix.hpp"

namespace chainsub {

/// The module ⊕_i Λ/t^{λ_i} with generators x_1..x_m and relations
/// t^{λ_i} x_i = 0. Parts are stored in descending order.
class PartitionModule {
 public:
  PartitionModule() = default;
  PartitionModule(RingPtr ring, std::vector<int> partition, std::vector<std::string> labels = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& partition() const { return parts_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t rank() const { return parts_.size(); }
  /// log_q of the number of elements.
  int log_size() const;

  RingVector zero() const { return RingVector(parts_.size()); }
  RingVector generator(std::size_t i) const;
  /// Reduces coordinates modulo the parts; throws on a length mismatch.
  RingVector element(RingVector coords) const;
  bool is_reduced(const RingVector& v) const;

  RingVector add(const RingVector& a, const RingVector& b) const { return vec::add(*ring_, a, b, parts_); }
  RingVector sub(const RingVector& a, const RingVector& b) const { return vec::sub(*ring_, a, b, parts_); }
  RingVector scale(RingElement s, const RingVector& a) const { return vec::scale(*ring_, s, a, parts_); }
  RingVector t_scale(const RingVector& a, int k) const { return vec::t_scale(*ring_, a, k, parts_); }

  /// Same ring and partition (labels are cosmetic).
  bool same_shape(const PartitionModule& o) const;

 private:
  RingPtr ring_;
  std::vector<int> parts_;
  std::vector<std::string> labels_;
};

/// A submodule stored by its Howell basis, so equality is syntactic.
class Submodule {
 public:
  Submodule() = default;
  Submodule(PartitionModule parent, std::vector<RingVector> generators);
  static Submodule zero(PartitionModule parent) { return Submodule(std::move(parent), {}); }
  static Submodule whole(PartitionModule parent);

  const PartitionModule& parent() const { return parent_; }
  const std::vector<RingVector>& rows() const { return rows_; }
  const Ring& ring() const { return *parent_.ring(); }

  bool contains(const RingVector& v) const;
  /// Canonical representative of v + U.
  RingVector reduce(RingVector v) const;
  bool is_zero() const { return rows_.empty(); }
  bool is_subset_of(const Submodule& o) const;
  int log_size() const;
  /// Exponent of t^{e_c - v} for each Howell row: element i of the canonical
  /// parametrization runs over Λ/t^{orders()[i]}.
  std::vector<int> orders() const;
  /// Visits every element exactly once.
  void for_each_element(const std::function<void(const RingVector&)>& f) const;

  bool operator==(const Submodule& o) const;

 private:
  PartitionModule parent_;
  std::vector<RingVector> rows_;
};

Submodule submodule_from_generators(const PartitionModule& m, std::vector<RingVector> gens);

Submodule sum(const Submodule& u, const Submodule& v);
Submodule intersect(const Submodule& u, const Submodule& v);
/// t^s U.
Submodule t_image(const Submodule& u, int s);
/// {x : t^s x ∈ U}.
Submodule t_preimage(const Submodule& u, int s);
/// t^{-s}0 = {x : t^s x = 0}.
Submodule s_socle(const PartitionModule& m, int s);

/// Λ-linear map given by a target x source matrix. Entry (i,j) is the
/// x_i-coordinate of the image of x_j; it must have valuation at least
/// max(0, b_i - a_j).
class ModMorphism {
 public:
  ModMorphism() = default;
  ModMorphism(PartitionModule source, PartitionModule target, std::vector<RingVector> matrix);
  static ModMorphism zero(PartitionModule source, PartitionModule target);
  static ModMorphism identity(PartitionModule m);
  /// Map sending generator j of the source to images[j].
  static ModMorphism from_images(PartitionModule source, PartitionModule target, const std::vector<RingVector>& images);

  const PartitionModule& source() const { return source_; }
  const PartitionModule& target() const { return target_; }
  const std::vector<RingVector>& matrix() const { return matrix_; }
  RingElement operator()(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  RingVector apply(const RingVector& v) const;
  RingVector image_of_generator(std::size_t j) const;
  Submodule image(const Submodule& u) const;
  Submodule image() const;
  Submodule kernel() const;
  Submodule preimage(const Submodule& w) const;
  bool is_zero() const;

  bool operator==(const ModMorphism& o) const { return matrix_ == o.matrix_ && source_.same_shape(o.source_) && target_.same_shape(o.target_); }

 private:
  PartitionModule source_, target_;
  std::vector<RingVector> matrix_;
};

/// g ∘ f.
ModMorphism compose(const ModMorphism& g, const ModMorphism& f);
ModMorphism add(const ModMorphism& f, const ModMorphism& g);
ModMorphism scale(RingElement s, const ModMorphism& f);

/// Coordinates of Hom(M, N) ≅ ⊕_{i,j} Λ/t^{min(a_j, b_i)}: the (i,j) entry of
/// a morphism is c_ij · t^{max(0, b_i - a_j)}. Coordinates are ordered by
/// descending order exponent (stable in row-major (i, j)), so the coordinate
/// space is itself a partition module.
struct HomCoordinates {
  PartitionModule source, target;
  PartitionModule space;
  std::vector<std::pair<std::size_t, std::size_t>> entry;  ///< matrix entry of each coordinate

  HomCoordinates(PartitionModule source, PartitionModule target);
  std::size_t size() const { return entry.size(); }
  const std::vector<int>& exps() const { return space.partition(); }
  RingVector to_coords(const ModMorphism& f) const;
  ModMorphism from_coords(const RingVector& c) const;
  /// Coordinate k alone: x_j ↦ t^{max(0, b_i - a_j)} x_i for (i,j) = entry[k].
  ModMorphism generator(std::size_t k) const;
};

/// Generators and orders of Hom(M, N) in the closed form.
struct ModHomGroup {
  std::vector<ModMorphism> generators;
  std::vector<int> orders;
  int log_size() const;
};
ModHomGroup hom_group(const PartitionModule& m, const PartitionModule& n);

/// M/U ≅ ⊕ Λ/t^{d_i} with d sorted descending and zero parts dropped.
struct Quotient {
  PartitionModule module;
  ModMorphism projection;         ///< M → M/U
  std::vector<RingVector> lifts;  ///< preimage in M of each quotient generator
};
Quotient quotient_invariants(const PartitionModule& m, const Submodule& u);

/// Writes a submodule as a partition module with an injective map onto it.
struct Decomposition {
  PartitionModule module;
  ModMorphism embedding;  ///< module → parent, image equals the submodule
};
Decomposition decompose(const Submodule& u);

/// Unique preimage of v under an injective map, if v lies in the image.
std::optional<RingVector> preimage_of(const ModMorphism& injective, const RingVector& v);

/// A/B for B ⊆ A with t·A ⊆ B, presented as a k-vector space.
class Subquotient {
 public:
  Subquotient(const Submodule& a, const Submodule& b);

  std::size_t dim() const { return quotient_.module.rank(); }
  const Submodule& top() const { return a_; }
  const Submodule& bottom() const { return b_; }
  /// Coordinates over k of the class of x ∈ A; throws if x ∉ A.
  std::vector<FieldElem> coords(const RingVector& x) const;
  /// Canonical lift Σ c_i · lift_i in A.
  RingVector lift(const std::vector<FieldElem>& c) const;
  const RingVector& basis_lift(std::size_t i) const { return lifts_[i]; }

 private:
  Submodule a_, b_;
  Decomposition dec_;
  Quotient quotient_;
  std::vector<RingVector> lifts_;
};

}  // namespace chainsub
