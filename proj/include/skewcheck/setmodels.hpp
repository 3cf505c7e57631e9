#pragma once

// Skew structures on finite sets driven by a magma M with a designated
// element 1:
//
//   X⊗Y = M × X × Y
//   α: (m, n, x, y, z) ↦ (m·n, x, m, y, z)
//   λ: (m, i, x) ↦ x
//   ρ: x ↦ (1, x, i0)
//
// The cartesian unit-unit model is the same construction with a one-point M
// and a two-point unit set I = {a, b}, i0 = a.
//
// Elements of composite sets are flat index tuples in preorder: every ⊗
// contributes its M coordinate before the coordinates of its two factors.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcheck/skewstruct.hpp"
#include "skewcheck/units.hpp"

namespace skewcheck {

struct Magma {
  int size = 0;
  std::vector<int> table;  // table[a * size + b] = a·b
  int designated = 0;

  /// Throws ValidationError(MalformedTable) unless the table is total and
  /// designated < size.
  static Magma make(int size, std::vector<int> table, int designated);

  int op(int a, int b) const { return table[static_cast<std::size_t>(a * size + b)]; }

  bool associative() const;
  bool left_identity(int e) const;   // e·x = x for all x
  bool right_identity(int e) const;  // x·e = x for all x

  friend bool operator==(const Magma&, const Magma&) = default;
};

/// "1" for the designated element, then "a", "b", ... in index order.
std::string element_name(const Magma& m, int x);

enum class ModelKind { Magma, CartesianUnitUnit };

struct PointwiseModel {
  ModelKind kind = ModelKind::Magma;
  Magma magma;                  // one-point magma for the cartesian model
  std::vector<int> test_sizes = {1};

  static PointwiseModel magma_model(Magma m, std::vector<int> sizes = {1});
  static PointwiseModel cartesian_unitunit(std::vector<int> sizes = {1});

  int unit_size() const { return kind == ModelKind::CartesianUnitUnit ? 2 : 1; }

  friend bool operator==(const PointwiseModel&, const PointwiseModel&) = default;
};

struct AxiomSignature {
  std::array<bool, 5> holds{};  // indexed by Axiom

  bool operator[](Axiom a) const { return holds[static_cast<std::size_t>(a)]; }
  bool& operator[](Axiom a) { return holds[static_cast<std::size_t>(a)]; }

  /// Five letters T/F in axiom order, e.g. "FTTTT".
  std::string to_string() const;
  static AxiomSignature parse(const std::string& text);
  static AxiomSignature all_true();

  friend auto operator<=>(const AxiomSignature&, const AxiomSignature&) = default;
};

struct ModelEvaluation {
  AxiomSignature signature;
  /// Per axiom: the first domain element (flat tuple) where the two
  /// composites differ, empty when the axiom holds.
  std::array<std::vector<int>, 5> witnesses;
};

ModelEvaluation evaluate_model(const PointwiseModel& m);

struct NamedModel {
  std::string name;
  PointwiseModel model;
};

/// paper-left, paper-mid, paper-right, paper-unitunit.
std::vector<NamedModel> builtin_models();

/// Swaps the left and right flags.
AxiomSignature dual_signature(AxiomSignature s);

struct CensusEntry {
  AxiomSignature signature;
  std::uint64_t count = 0;
  Magma witness;  // first in enumeration order
};

struct Census {
  int max_size = 0;
  std::uint64_t total = 0;
  std::vector<CensusEntry> entries;  // sorted by signature string
};

/// Number of (table, designated) pairs of sizes 2..max_size.
std::uint64_t census_size(int max_size);

/// Every magma of size 2..max_size with every designated element, in order
/// of size, designated element, then table read as a base-size numeral with
/// the first entry most significant. Throws SearchBudgetExceeded up front
/// when census_size exceeds the budget.
Census census(int max_size, std::uint64_t budget = kDefaultBudget);

namespace serial {
Census census(int max_size, std::uint64_t budget = kDefaultBudget);
}  // namespace serial

/// The signature read off the table: associativity, right and left identity
/// of the designated element, the other two flags true.
AxiomSignature table_signature(const Magma& m);

struct FiniteModel {
  SkewMonoidal structure;
  std::vector<std::string> object_names;
};

/// Materializes a finite fragment of the set model: objects are ⊗-words of
/// at most `depth` tensor nodes over the leaves (I plus one leaf per test
/// size different from |I|); morphisms are the functions generated by
/// identities, α, λ and ρ under composition and ⊗. The tensor is partial
/// beyond `depth`. Throws ValidationError(CapExceeded) past the fincat caps.
FiniteModel to_finite_structure(const PointwiseModel& m, int depth = 3);

}  // namespace skewcheck
