#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chainsub/field.hpp"

namespace chainsub {

/// Representation of Δ: sink 1, sources 2 and 3, arrows α: 2 → 1 and
/// β, γ: 3 → 1. Maps act on column vectors (α is d1 x d2).
struct DeltaRep {
  FiniteField field;
  std::array<std::size_t, 3> dims{0, 0, 0};
  FieldMatrix alpha, beta, gamma;

  DeltaRep() = default;
  DeltaRep(FiniteField k, std::array<std::size_t, 3> dims, FieldMatrix alpha, FieldMatrix beta, FieldMatrix gamma);
  /// The simple representation S(v), v ∈ {1, 2, 3}.
  static DeltaRep simple(const FiniteField& k, int vertex);

  bool operator==(const DeltaRep&) const = default;
};

DeltaRep direct_sum(const DeltaRep& a, const DeltaRep& b);

/// Vertex maps g_v: R_v → R'_v.
struct DeltaMorphism {
  FieldMatrix g1, g2, g3;
  bool operator==(const DeltaMorphism&) const = default;
};

bool is_morphism(const DeltaRep& r, const DeltaRep& s, const DeltaMorphism& g);
DeltaMorphism identity(const DeltaRep& r);
DeltaMorphism zero_morphism(const DeltaRep& r, const DeltaRep& s);
/// g ∘ f.
DeltaMorphism compose(const FiniteField& k, const DeltaMorphism& g, const DeltaMorphism& f);
DeltaMorphism add(const FiniteField& k, const DeltaMorphism& f, const DeltaMorphism& g);
DeltaMorphism scale(const FiniteField& k, FieldElem s, const DeltaMorphism& f);
bool is_isomorphism(const FiniteField& k, const DeltaMorphism& g);

/// A basis of Hom(R, R').
std::vector<DeltaMorphism> delta_hom(const DeltaRep& r, const DeltaRep& s);
/// Σ c_i basis_i.
DeltaMorphism combine(const DeltaRep& r, const DeltaRep& s, const std::vector<DeltaMorphism>& basis,
                      const std::vector<FieldElem>& c);

struct SummandProfile {
  std::size_t s1 = 0, s2 = 0, s3 = 0;
  bool is_socle_projective() const { return s2 == 0 && s3 == 0; }
  bool is_mod_e() const { return s1 == 0 && s2 == 0 && s3 == 0; }
  bool operator==(const SummandProfile&) const = default;
};
SummandProfile simple_summand_profile(const DeltaRep& r);

/// (W = k^m, V ⊆ W, U ⊆ W ⊕ W) with V, U as RREF row bases.
struct Triple {
  std::size_t m = 0;
  FieldMatrix V, U;
  bool operator==(const Triple&) const = default;
};

/// α the inclusion of V, β and γ the two projections restricted to U.
DeltaRep triple_to_rep(const FiniteField& k, const Triple& t);
/// Inverse of triple_to_rep up to isomorphism; throws SummandObstruction
/// if S(2) or S(3) is a direct summand.
Triple rep_to_triple(const DeltaRep& r);

struct IsoResult {
  std::optional<DeltaMorphism> witness;
  /// True when a missing witness proves the representations are not
  /// isomorphic (dimension vectors differ or the search was exhaustive).
  bool conclusive = false;
};

/// Searches Hom(R, R') for an isomorphism: exhaustively when q ≤ 3 and the
/// Hom space has dimension ≤ 8, otherwise by seeded random combinations.
/// A returned witness is always verified.
IsoResult iso_witness(const DeltaRep& r, const DeltaRep& s, std::uint64_t seed = 0, int random_trials = 256);

}  // namespace chainsub
