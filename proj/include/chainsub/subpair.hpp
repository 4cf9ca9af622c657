#pragma once

#include <array>
#include <functional>

#include "chainsub/field.hpp"
#include "chainsub/module.hpp"

namespace chainsub {

/// An object (M1 ⊆ M0) of the submodule category.
struct SubPair {
  PartitionModule M0;
  Submodule M1;

  SubPair() = default;
  SubPair(PartitionModule m0, Submodule m1);
  SubPair(PartitionModule m0, std::vector<RingVector> m1_generators);

  const RingPtr& ring() const { return M0.ring(); }
  bool operator==(const SubPair& o) const { return M0.same_shape(o.M0) && M1 == o.M1; }
};

/// A map of ambient modules carrying M1 into N1.
class PairMorphism {
 public:
  PairMorphism() = default;
  /// Throws ConstraintViolated unless f0(M1) ⊆ N1.
  PairMorphism(SubPair source, SubPair target, ModMorphism f0);
  static PairMorphism identity(const SubPair& m);
  static PairMorphism zero(const SubPair& m, const SubPair& n);

  const SubPair& source() const { return source_; }
  const SubPair& target() const { return target_; }
  const ModMorphism& f0() const { return f0_; }
  bool is_zero() const { return f0_.is_zero(); }
  bool operator==(const PairMorphism& o) const { return f0_ == o.f0_; }

 private:
  SubPair source_, target_;
  ModMorphism f0_;
};

PairMorphism compose(const PairMorphism& g, const PairMorphism& f);
PairMorphism add(const PairMorphism& f, const PairMorphism& g);
PairMorphism scale(RingElement s, const PairMorphism& f);

/// A subgroup of Hom(M0, N0) made of pair morphisms, presented as a
/// submodule of the Hom coordinate space together with a decomposition
/// ⊕ Λ/t^{e_i} into independent generators.
class HomGroup {
 public:
  HomGroup(SubPair source, SubPair target, Submodule subgroup);

  const SubPair& source() const { return source_; }
  const SubPair& target() const { return target_; }
  const HomCoordinates& coordinates() const { return coords_; }
  const Submodule& subgroup() const { return subgroup_; }
  const std::vector<PairMorphism>& generators() const { return generators_; }
  const std::vector<int>& orders() const { return orders_; }
  /// log_q of the group order.
  int log_size() const { return subgroup_.log_size(); }

  bool contains(const ModMorphism& f) const;
  /// Σ λ_i · generator_i.
  PairMorphism combination(const RingVector& lambda) const;
  /// Visits every element once.
  void for_each(const std::function<void(const PairMorphism&)>& f) const;

 private:
  SubPair source_, target_;
  HomCoordinates coords_;
  Submodule subgroup_;
  std::vector<PairMorphism> generators_;
  std::vector<int> orders_;
};

/// All pair morphisms M → N.
HomGroup hom_pairs(const SubPair& m, const SubPair& n);

/// The subgroup generated by composites M → I → N.
HomGroup hom_through_I(const SubPair& m, const SubPair& n);

/// The intrinsic I: I0 = (6,4,2) with generators a, b, c and
/// I1 = ⟨t³a − t²b, t²b − tc⟩.
SubPair canonical_I(const RingPtr& ring);
/// J0 = (7,4,2) with generators x, y, z and J1 = ⟨t³x − ty, ty − z⟩.
SubPair canonical_J(const RingPtr& ring);
/// I → J, a ↦ tx, b ↦ y, c ↦ z; its image is (⟨tx, y, z⟩, tJ1).
PairMorphism canonical_inclusion(const RingPtr& ring);

/// Direct sum with partitions merged by a stable descending sort.
struct DirectSum {
  SubPair pair;
  /// position[s][g]: index in the sum of generator g of summand s.
  std::vector<std::vector<std::size_t>> position;

  PairMorphism injection(std::size_t s, const SubPair& summand) const;
  PairMorphism projection(std::size_t s, const SubPair& summand) const;
};
DirectSum direct_sum(const std::vector<SubPair>& summands);
SubPair direct_sum(const SubPair& m, const SubPair& n);
/// M^r; for M = J the generators come out as x_1..x_r, y_1..y_r, z_1..z_r.
DirectSum power(const SubPair& m, std::size_t r);

/// L1 ⊆ L2 ⊆ ... ⊆ L6 (index 0 holds L1).
struct LayerFiltration {
  std::array<Submodule, 6> L;
  const Submodule& operator[](int i) const { return L[static_cast<std::size_t>(i - 1)]; }
};
LayerFiltration layers(const SubPair& m);

struct ISocle {
  Submodule L6;        ///< ambient part L6M
  Submodule M1L3;      ///< submodule part M1 ∩ L3M
  std::size_t rank;    ///< r with (M1 ∩ L3M ⊆ L6M) ≅ I^r
  PairMorphism theta;  ///< I^r → M, an isomorphism onto the subobject
};
/// Throws DecompositionFailed if the subobject is not a power of I.
ISocle i_socle(const SubPair& m);

/// Frame coordinates on J^m (generators x_1..x_m, y_1..y_m, z_1..z_m).
namespace frame {

/// L1(J^m) = ⟨t⁶x_i⟩ → k^m.
std::vector<FieldElem> kappa1(const Ring& r, std::size_t m, const RingVector& w);
/// J0^m → J0^m / I0^m ≅ k^m.
std::vector<FieldElem> kappa2(const Ring& r, std::size_t m, const RingVector& w);
/// J1^m → J1^m / I1^m ≅ k^m ⊕ k^m in the basis g1 = t³x − ty, g2 = z − ty:
/// the g1-coefficients followed by the g2-coefficients.
std::vector<FieldElem> kappa3(const Ring& r, std::size_t m, const RingVector& w);
/// Σ v_i x_i.
RingVector lift_v(const Ring& r, std::size_t m, const std::vector<FieldElem>& v);
/// Σ u'_i g1_i + u''_i g2_i.
RingVector lift_u(const Ring& r, std::size_t m, const std::vector<FieldElem>& u);

}  // namespace frame

/// An object I^m ⊆ M ⊆ J^m with its frame: an injective pair morphism
/// M → J^m whose image is (I0^m + lifts of V, I1^m + lifts of U).
struct FramedObject {
  std::size_t m = 0;
  FieldMatrix V;  ///< RREF basis of a subspace of k^m
  FieldMatrix U;  ///< RREF basis of a subspace of k^m ⊕ k^m
  SubPair realized;
  PairMorphism frame;

  const Ring& ring() const { return *realized.ring(); }
  const FiniteField& field() const { return ring().residue_field(); }
};

/// The pair of submodules (I0^m + lifts of V, I1^m + lifts of U) of J0^m.
struct FrameImage {
  Submodule M0, M1;
};
FrameImage frame_image(const RingPtr& ring, std::size_t m, const FieldMatrix& V, const FieldMatrix& U);

/// Verifies I^m ⊆ M ⊆ J^m up to a frame and extracts (V, U). Throws
/// NotInInterval naming the failing condition.
FramedObject check_interval(const SubPair& m, std::size_t rank);

}  // namespace chainsub
