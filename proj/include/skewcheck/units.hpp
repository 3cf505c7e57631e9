#pragma once

// The category of units: enumeration of (I, λ, ρ), unit morphisms, the
// canonical morphism between two units, transport along isomorphisms, and
// exhaustive checks of the uniqueness results on finite instances.
//
// Functions that assert a theorem throw PropositionViolated on failure.

#include <cstdint>
#include <string>
#include <vector>

#include "skewcheck/skewstruct.hpp"

namespace skewcheck {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  AxiomMask mask = AxiomMask::unit_axioms();
  std::uint64_t budget = kDefaultBudget;
};

/// λ'_X ∘ (f⊗1_X) = λ_X and (1_X⊗f) ∘ ρ_X = ρ'_X for every X.
/// Throws ShapeMismatch unless f: I -> J.
bool is_unit_morphism(const TensorStructure& s, const UnitCandidate& u, const UnitCandidate& v,
                      MorId f);

/// λ_J ∘ ρ'_I, where λ belongs to u and ρ' to v. Asserts it is a unit
/// morphism u -> v.
MorId canonical_morphism(const TensorStructure& s, const UnitCandidate& u,
                         const UnitCandidate& v);

/// All (I, λ, ρ) with λ, ρ natural and the masked axioms true, ordered by
/// unit object, then λ, then ρ (component arrays compared lexicographically).
/// If the mask includes the pentagon and it fails, the result is empty.
/// Requires a total tensor (PreconditionUnmet). Throws SearchBudgetExceeded.
std::vector<UnitCandidate> enumerate_units(const TensorStructure& s,
                                           const SearchOptions& opts = {});

namespace serial {
/// Unpruned brute force over every component choice; reference for tests.
std::vector<UnitCandidate> enumerate_units(const TensorStructure& s,
                                           const SearchOptions& opts = {});
}  // namespace serial

struct UnitsCategory {
  std::vector<UnitCandidate> units;
  std::vector<std::vector<MorId>> morphisms;  // [i * units.size() + j]: unit morphisms i -> j

  const std::vector<MorId>& hom(std::size_t i, std::size_t j) const {
    return morphisms[i * units.size() + j];
  }
};

/// Enumerates units (default mask: all five axioms) and every unit morphism
/// between each ordered pair. Asserts each hom-set is exactly the canonical
/// morphism and that opposite canonical morphisms are mutually inverse.
UnitsCategory build_units_category(const TensorStructure& s,
                                   SearchOptions opts = {AxiomMask::all(), kDefaultBudget});

/// Same assertions on a given list of units, for structures where
/// enumeration is unavailable.
UnitsCategory units_category_of(const TensorStructure& s, std::vector<UnitCandidate> units);

struct DeterminationReport {
  std::size_t units = 0;
  std::size_t lambda_groups = 0;  // distinct (I, λ)
  std::size_t rho_groups = 0;     // distinct (I, ρ)
};

/// Asserts that (I, λ) determines ρ and (I, ρ) determines λ.
DeterminationReport determination_check(const TensorStructure& s, const SearchOptions& opts = {});
DeterminationReport determination_check(const std::vector<UnitCandidate>& units);

/// (J, λ∘(f⊗1), (1⊗f_inv)∘ρ) for f: J -> I. Throws NotAnIsomorphism unless
/// f_inv is a two-sided inverse; asserts the result passes the unit axioms.
UnitCandidate transport_unit(const TensorStructure& s, const UnitCandidate& u, MorId f,
                             MorId f_inv);

/// The unit on I⊗J obtained by transporting v along u's λ_J: I⊗J -> J.
/// Throws NotAnIsomorphism when λ_J is not invertible.
UnitCandidate tensor_of_units(const TensorStructure& s, const UnitCandidate& u,
                              const UnitCandidate& v);

struct TensorSquare {
  UnitCandidate candidate;  // on I⊗I
  bool is_unit = false;
  bool lambda_invertible = false;
};

/// Candidate (I⊗I, λ_X∘(λ_I⊗1), (1⊗ρ_I)∘ρ_X); asserts is_unit ⇔ λ_I invertible.
TensorSquare tensor_square_candidate(const TensorStructure& s, const UnitCandidate& u);

struct EndMonoid {
  std::vector<MorId> carrier;  // hom(I, I)
  std::vector<int> table;      // carrier index of carrier[i] ∘ carrier[j] at [i * k + j]
  MorId unit = kNoMorphism;

  std::size_t size() const { return carrier.size(); }
};

struct EndMonoidResult {
  EndMonoid monoid;
  bool commutative = false;
  bool weakly_normal = false;
};

/// Asserts weakly normal ⇒ commutative.
EndMonoidResult end_monoid_commutative(const TensorStructure& s, const UnitCandidate& u);

/// Requires the left and mid axioms and invertible λ_X, ρ_X for every X
/// (PreconditionUnmet otherwise). Returns the unit-unit axiom and asserts it.
bool invertible_units_lemma_check(const TensorStructure& s, const UnitCandidate& u);

/// λ_I ∘ ρ_I is a unit morphism from u to itself whenever the left, mid and
/// right axioms hold. Returns false if it is not.
bool unit_unit_is_unit_morphism(const TensorStructure& s, const UnitCandidate& u);

}  // namespace skewcheck
