#pragma once

// Monoidal functors (F, φ, F0) between skew monoidal categories: the
// associativity hexagon, the two unit squares, classification and the
// uniqueness of F0.

#include <memory>
#include <optional>
#include <vector>

#include "skewcheck/skewstruct.hpp"

namespace skewcheck {

struct MonoidalFunctorData {
  std::shared_ptr<const SkewMonoidal> source;  // (C, ⊗', I, λ', ρ')
  std::shared_ptr<const SkewMonoidal> target;  // (D, ⊗, J, λ, ρ)
  FinFunctor functor;
  MorphismFamily phi;       // φ_{X,Y}: FX⊗FY -> F(X⊗'Y)
  MorId f0 = kNoMorphism;   // J -> F(I), or kNoMorphism when not chosen

  /// Checks that the functor runs between the two bases, the shapes of φ
  /// and F0 (ShapeMismatch) and naturality of φ (NotNatural). Both
  /// structures need total tensors (PreconditionUnmet).
  static MonoidalFunctorData make(std::shared_ptr<const SkewMonoidal> source,
                                  std::shared_ptr<const SkewMonoidal> target, FinFunctor functor,
                                  std::vector<MorId> phi, MorId f0);
};

struct MonoidalReport {
  bool assoc_ok = false;
  bool unit_ok = false;
  std::vector<ObjId> assoc_witness;  // (X, Y, Z)
  std::vector<ObjId> unit_witness;   // (X), empty when F0 is missing
};

MonoidalReport check_monoidal_functor(const MonoidalFunctorData& d);

/// First X where the hexagon fails, as (X, Y, Z); nullopt when it holds.
std::optional<std::vector<ObjId>> hexagon_violation(const MonoidalFunctorData& d);

/// Both unit squares for a given F0 candidate; returns the first failing X.
std::optional<ObjId> unit_square_violation(const MonoidalFunctorData& d, MorId f0);

/// Every F0 in hom(J, F(I)) satisfying both unit squares. Requires the
/// hexagon (PreconditionUnmet) and asserts at most one candidate.
std::vector<MorId> enumerate_unit_maps(const MonoidalFunctorData& d);

struct Classification {
  bool lax = true;
  bool normal = false;  // F0 invertible
  bool strong = false;  // F0 and every φ invertible
};

/// Requires a passing check_monoidal_functor (PreconditionUnmet).
Classification classify(const MonoidalFunctorData& d);

/// Transports the target unit to F(I) along F0⁻¹ and asserts that the
/// canonical morphism from J to it is F0. Throws NotAnIsomorphism when F0
/// is not invertible.
bool transported_unit_agreement(const MonoidalFunctorData& d);

}  // namespace skewcheck
