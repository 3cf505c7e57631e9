#pragma once

// Small hand-built categories, tensor structures and monoidal functors.

#include <memory>
#include <string>
#include <vector>

#include "skewcheck/monfun.hpp"

namespace skewcheck::fixtures {

// Category builders. Identities always come first, one per object.
CategoryPtr terminal_category();
/// Exactly one morphism between every ordered pair of objects.
CategoryPtr codiscrete(int n);
/// Identities only.
CategoryPtr discrete(int n);
/// 0 < 1 < ... < n-1; morphisms after the identities are the pairs a < b in
/// lexicographic order.
CategoryPtr chain(int n);
/// One object; table[i*k + j] = i·j with element 0 the identity.
CategoryPtr monoid(int k, const std::vector<int>& table);

/// In a category with at most one morphism per hom-set, f⊗g and α are
/// forced by obj_tensor. Throws PreconditionUnmet when a needed hom-set is
/// empty.
TensorStructure thin_structure(CategoryPtr c, std::vector<ObjId> obj_tensor);
/// The forced λ, ρ at `unit` in a thin structure.
UnitCandidate thin_unit(const TensorStructure& s, ObjId unit);

/// One object, one morphism, everything an identity.
SkewMonoidal terminal();
/// Codiscrete on {0, 1}; X⊗Y = 0 constantly. Units sit at 0 and at 1.
TensorStructure codisc2();
/// One object with End = Z/2 = {1, s}; f⊗g = f·g, α = 1. Its units are
/// (λ, ρ) = (1, 1) and (s, s).
TensorStructure bz2();
MorId bz2_s();
UnitCandidate bz2_unit(bool twisted);
/// Discrete {0, 1} with X⊗Y = X. No units.
TensorStructure discrete2_projection();
/// Discrete {0, 1} with X⊗Y = max(X, Y), unit 0.
SkewMonoidal disc2_join();
/// Chain 0 < 1 < 2 with X⊗Y = max(X, Y), unit 0.
SkewMonoidal chain3_max();
/// Chain 0 < 1 < 2 with X⊗Y = min(2, X + Y), unit 0.
SkewMonoidal chain3_plus();

/// Chain 0 < 1 < 2 with X⊗Y = Y, unit 2: λ is invertible, ρ_0 and ρ_1 are not.
SkewMonoidal chain3_second_projection();
/// Chain 0 < 1 < 2 with X⊗Y = 0 if Y = 0 and max(X, 1) otherwise, unit 1:
/// λ_2 and ρ_0 are not invertible.
SkewMonoidal chain3_skew();

std::shared_ptr<const SkewMonoidal> share(SkewMonoidal s);

/// F = 1, φ = 1, F0 = 1.
MonoidalFunctorData identity_functor(const std::shared_ptr<const SkewMonoidal>& s);
/// The functor from the terminal structure onto object `to` of Codisc2.
MonoidalFunctorData terminal_to_codisc2(ObjId to = 0, ObjId unit = 0);
/// Terminal -> disc2-join at object 1: hom(J, F(I)) is empty, F0 unset.
MonoidalFunctorData terminal_to_disc2_join();
/// Identity of BZ2 with φ = s and F0 = s.
MonoidalFunctorData bz2_twist();
/// Terminal -> BZ2 with the given φ component, a monoid in BZ2; F0 unset.
MonoidalFunctorData monoid_in_bz2(MorId phi);
/// Identity on objects from chain3-plus to chain3-max; φ_{1,1}: 1 -> 2 is
/// not invertible.
MonoidalFunctorData chain_plus_to_max();
/// X ↦ min(2, X + 1) on chain3-max; F0: 0 -> 1 is not invertible.
MonoidalFunctorData chain_shift();

struct NamedStructure {
  std::string name;
  TensorStructure tensor;
};

/// Every fixture structure with a total tensor.
std::vector<NamedStructure> corpus();

}  // namespace skewcheck::fixtures
