#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainsub/delta.hpp"
#include "chainsub/subpair.hpp"

namespace chainsub {

/// γ′: L4M → L1M, evaluated by two explicit choices. The submodules it needs
/// are computed once per object.
class GammaPrime {
 public:
  explicit GammaPrime(const SubPair& m);

  const LayerFiltration& layers() const { return layers_; }
  /// t²L5M, the correction allowed in the first choice.
  const Submodule& first_choices() const { return t2l5_; }
  /// M1 ∩ L3M, the correction allowed in the second choice.
  const Submodule& second_choices() const { return m1l3_; }
  /// t³L6M, where the second choice must land.
  const Submodule& second_target() const { return t3l6_; }

  /// c′ ∈ (tc + t²L5M) ∩ t⁻¹0; throws InternalInconsistency if none exists.
  RingVector first_step(const RingVector& c) const;
  /// c″ ∈ (c′ + (M1 ∩ L3M)) ∩ t³L6M; throws InternalInconsistency if none exists.
  RingVector second_step(const RingVector& c1) const;
  /// t²c″. Throws PreconditionViolated unless c ∈ L4M.
  RingVector operator()(const RingVector& c) const;

 private:
  PartitionModule m0_;
  LayerFiltration layers_;
  Submodule t2l5_, m1l3_, t3l6_;
};

RingVector gamma_prime(const FramedObject& m, const RingVector& c);

/// Coordinates on the three vertex spaces of F(M), read off through the frame:
/// vertex 1 = L1M with the standard basis of k^m, vertex 2 = M0/L6M with the
/// RREF basis of V, vertex 3 = M1/(M1 ∩ L3M) with the RREF basis of U.
class FrameCoordinates {
 public:
  explicit FrameCoordinates(const FramedObject& m);

  std::size_t dim(int vertex) const { return lifts_[static_cast<std::size_t>(vertex - 1)].size(); }
  /// Element of M0 representing basis vector i of the given vertex.
  const RingVector& lift(int vertex, std::size_t i) const { return lifts_[static_cast<std::size_t>(vertex - 1)][i]; }
  /// Coordinates of the class of x ∈ M0 (x in L1M, M0, M1 respectively).
  std::vector<FieldElem> coords(int vertex, const RingVector& x) const;

 private:
  FramedObject obj_;
  std::array<std::vector<RingVector>, 3> lifts_;
};

/// F(M) with α = t⁶, β = t³ and γ induced by γ′.
DeltaRep F_object(const FramedObject& m);
/// Maps induced on the three vertex spaces.
DeltaMorphism F_morphism(const FramedObject& source, const FramedObject& target, const PairMorphism& f);

/// Fibre product along (U → V) ⊆ (W ⊕ W → W): the pair (I0^m + lifts of V,
/// I1^m + lifts of U), written as a partition module with its frame into J^m.
FramedObject Phi_object(const RingPtr& ring, const Triple& t);

/// Restriction of g̃ ⊗ 1 on J^m, where g̃ is the entrywise lift of g
/// (g: k^m → k^m′, a m′ x m matrix). An explicit Λ-matrix lifting g may be
/// supplied instead. Throws ConstraintViolated if g does not carry V into V′
/// and U into U′.
PairMorphism Phi_morphism(const FieldMatrix& g, const FramedObject& source, const FramedObject& target,
                          const std::optional<std::vector<RingVector>>& lift = std::nullopt);

/// Entrywise lift of g to Λ (least residue or constant polynomial).
std::vector<RingVector> canonical_lift(const Ring& r, const FieldMatrix& g);

/// A k⟨X, Y⟩-module: k^d with two endomorphisms.
struct TwoMatrixModule {
  FiniteField field;
  std::size_t d = 0;
  FieldMatrix X, Y;

  TwoMatrixModule() = default;
  TwoMatrixModule(FiniteField k, FieldMatrix x, FieldMatrix y);
};

struct Embedding {
  DeltaRep rep;   ///< dimension vector (2d, d, 2d)
  Triple triple;  ///< (V ⊕ V, V ⊕ 0, U_XY)
};
/// α = [1; 0], β = 1, γ = [0 X; 1 Y].
Embedding G_embed(const TwoMatrixModule& v);

/// Basis of {f : fX = X′f, fY = Y′f}, each f a d′ x d matrix.
std::vector<FieldMatrix> commutant_oracle(const TwoMatrixModule& v, const TwoMatrixModule& w);

/// Finite-dimensional associative unital k-algebra given by structure
/// constants: basis_i · basis_j = Σ_l c[i][j][l] basis_l.
class KAlgebra {
 public:
  KAlgebra() = default;
  /// Throws InvalidArgument unless the product is associative with the given unit.
  KAlgebra(FiniteField k, std::vector<std::string> labels, std::vector<std::vector<std::vector<FieldElem>>> constants,
           std::vector<FieldElem> unit);

  const FiniteField& field() const { return k_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::vector<FieldElem>>>& constants() const { return c_; }
  const std::vector<FieldElem>& unit() const { return unit_; }
  std::vector<FieldElem> multiply(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const;

 private:
  FiniteField k_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<FieldElem>>> c_;
  std::vector<FieldElem> unit_;
};

/// The algebra spanned by a list of square matrices closed under products,
/// with structure constants in that basis.
KAlgebra matrix_algebra(const FiniteField& k, const std::vector<FieldMatrix>& basis);

/// End(M)/End(M)_I with the data certifying it.
class EndQuotient {
 public:
  explicit EndQuotient(const FramedObject& m);

  const HomGroup& endomorphisms() const { return end_; }
  const HomGroup& ideal() const { return ideal_; }
  /// Algebra on the canonical basis of coset representatives.
  const KAlgebra& algebra() const { return algebra_; }
  const PairMorphism& basis_element(std::size_t i) const { return basis_[i]; }
  /// Coordinates of the class of an endomorphism.
  std::vector<FieldElem> coords(const PairMorphism& f) const;
  /// Structure constants on the classes of the given endomorphisms; throws
  /// InvalidArgument unless those classes form a basis.
  KAlgebra algebra_on(const std::vector<PairMorphism>& basis) const;

 private:
  HomGroup end_, ideal_;
  std::optional<Subquotient> quotient_;
  std::vector<PairMorphism> basis_;
  KAlgebra algebra_;
};

/// Throws NotKAlgebra if t does not annihilate the quotient.
KAlgebra end_quotient(const FramedObject& m);

}  // namespace chainsub
