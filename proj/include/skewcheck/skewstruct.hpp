#pragma once

// Tensor structures (⊗, α) on a finite category, unit candidates (I, λ, ρ)
// and the five coherence checks.
//
// A tensor may be partial: obj_tensor returns kNoObject outside its domain.
// Checks skip every diagram that mentions an undefined object.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewcheck/fincat.hpp"

namespace skewcheck {

enum class Axiom : std::uint8_t { Pentagon, LeftUnit, MidUnit, RightUnit, UnitUnit };

inline constexpr std::array<Axiom, 5> kAxioms = {Axiom::Pentagon, Axiom::LeftUnit, Axiom::MidUnit,
                                                  Axiom::RightUnit, Axiom::UnitUnit};

/// "pentagon", "left", "mid", "right", "unitunit".
std::string_view axiom_name(Axiom a);

class AxiomMask {
 public:
  constexpr AxiomMask() = default;
  static constexpr AxiomMask all() { return AxiomMask(0x1f); }
  /// The four unit axioms: everything except the pentagon.
  static constexpr AxiomMask unit_axioms() { return AxiomMask(0x1e); }
  static constexpr AxiomMask none() { return AxiomMask(0); }

  /// Comma separated axiom names. Throws ParseError on unknown names.
  static AxiomMask parse(std::string_view text);

  constexpr bool has(Axiom a) const { return (bits_ >> static_cast<int>(a)) & 1U; }
  constexpr AxiomMask with(Axiom a) const {
    return AxiomMask(static_cast<std::uint8_t>(bits_ | (1U << static_cast<int>(a))));
  }
  constexpr AxiomMask without(Axiom a) const {
    return AxiomMask(static_cast<std::uint8_t>(bits_ & ~(1U << static_cast<int>(a))));
  }
  constexpr std::uint8_t bits() const { return bits_; }
  std::string to_string() const;

  friend constexpr bool operator==(AxiomMask, AxiomMask) = default;

 private:
  constexpr explicit AxiomMask(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

enum class Status : std::uint8_t { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct AxiomStatus {
  Status status = Status::Skipped;
  std::vector<ObjId> witness;  // object tuple, set iff status == Fail

  static AxiomStatus pass() { return {Status::Pass, {}}; }
  static AxiomStatus fail(std::vector<ObjId> w) { return {Status::Fail, std::move(w)}; }
  bool ok() const { return status != Status::Fail; }

  friend bool operator==(const AxiomStatus&, const AxiomStatus&) = default;
};

struct AxiomReport {
  std::array<AxiomStatus, 5> statuses;

  AxiomStatus& operator[](Axiom a) { return statuses[static_cast<std::size_t>(a)]; }
  const AxiomStatus& operator[](Axiom a) const { return statuses[static_cast<std::size_t>(a)]; }

  /// No enabled axiom failed.
  bool all_pass() const;
  int passed() const;
  int enabled() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

class TensorStructure {
 public:
  /// obj_tensor: n*n entries indexed [x*n + y]; mor_tensor: m*m entries
  /// indexed [f*m + g]; assoc: n^3 entries indexed [(x*n + y)*n + z].
  /// Throws ValidationError on shape errors, failed bifunctoriality
  /// (NotFunctorial) or a non-natural associator (NotNatural).
  static TensorStructure make(CategoryPtr base, std::vector<ObjId> obj_tensor,
                              std::vector<MorId> mor_tensor, std::vector<MorId> assoc);

  const FinCategory& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }

  ObjId tensor(ObjId x, ObjId y) const {
    if (x == kNoObject || y == kNoObject) return kNoObject;
    return obj_tensor_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n()) +
                       static_cast<std::size_t>(y)];
  }
  MorId tensor_mor(MorId f, MorId g) const {
    if (f == kNoMorphism || g == kNoMorphism) return kNoMorphism;
    return mor_tensor_[static_cast<std::size_t>(f) * static_cast<std::size_t>(m()) +
                       static_cast<std::size_t>(g)];
  }
  MorId assoc(ObjId x, ObjId y, ObjId z) const {
    if (x == kNoObject || y == kNoObject || z == kNoObject) return kNoMorphism;
    return assoc_.at(x, y, z);
  }
  const MorphismFamily& assoc_family() const { return assoc_; }

  const std::vector<ObjId>& obj_tensor_table() const { return obj_tensor_; }
  const std::vector<MorId>& mor_tensor_table() const { return mor_tensor_; }

  /// Every object pair has a tensor.
  bool total() const { return total_; }
  /// obj_tensor is constant.
  bool degenerate() const { return degenerate_; }

  friend bool operator==(const TensorStructure& a, const TensorStructure& b) {
    return *a.base_ == *b.base_ && a.obj_tensor_ == b.obj_tensor_ &&
           a.mor_tensor_ == b.mor_tensor_ && a.assoc_ == b.assoc_;
  }

 private:
  TensorStructure() = default;
  int n() const { return base_->object_count(); }
  int m() const { return base_->morphism_count(); }

  CategoryPtr base_;
  std::vector<ObjId> obj_tensor_;
  std::vector<MorId> mor_tensor_;
  MorphismFamily assoc_;
  bool total_ = true;
  bool degenerate_ = false;
};

/// First (f, g) where (f⊗1)∘(1⊗g), (1⊗g)∘(f⊗1) and f⊗g disagree.
std::optional<std::pair<MorId, MorId>> interchange_violation(const TensorStructure& s);

/// The legs X ↦ X⊗c, c⊗X and friends, as used for naturality checks.
Leg tensor_leg_left(const TensorStructure& s, ObjId c);   // X ↦ c⊗X
Leg tensor_leg_right(const TensorStructure& s, ObjId c);  // X ↦ X⊗c

struct UnitCandidate {
  ObjId unit = kNoObject;
  MorphismFamily lambda;  // λ_X: I⊗X -> X
  MorphismFamily rho;     // ρ_X: X -> X⊗I

  /// Validates shapes (ShapeMismatch) and naturality of λ and ρ (NotNatural).
  static UnitCandidate make(const TensorStructure& s, ObjId unit, std::vector<MorId> lambda,
                            std::vector<MorId> rho);
  /// Shapes only; used where naturality holds by construction.
  static UnitCandidate make_unchecked(const TensorStructure& s, ObjId unit,
                                      std::vector<MorId> lambda, std::vector<MorId> rho);

  friend bool operator==(const UnitCandidate&, const UnitCandidate&) = default;
};

/// A tensor structure together with a chosen unit.
struct SkewMonoidal {
  TensorStructure tensor;
  UnitCandidate unit;
};

/// Naturality of λ and ρ; witness is the failing morphism.
NaturalityResult lambda_natural(const TensorStructure& s, const UnitCandidate& u);
NaturalityResult rho_natural(const TensorStructure& s, const UnitCandidate& u);

AxiomStatus check_pentagon(const TensorStructure& s);
AxiomStatus check_left_unit(const TensorStructure& s, const UnitCandidate& u);
AxiomStatus check_mid_unit(const TensorStructure& s, const UnitCandidate& u);
AxiomStatus check_right_unit(const TensorStructure& s, const UnitCandidate& u);
AxiomStatus check_unit_unit(const TensorStructure& s, const UnitCandidate& u);

AxiomReport check_all(const TensorStructure& s, const UnitCandidate& u,
                      AxiomMask enabled = AxiomMask::all());

namespace serial {
/// Single-threaded reference for check_pentagon.
AxiomStatus check_pentagon(const TensorStructure& s);
}  // namespace serial

struct Normality {
  bool weakly_normal = false;
  bool left_normal = false;
  bool right_normal = false;
  bool normal = false;

  friend bool operator==(const Normality&, const Normality&) = default;
};

/// Throws NotAUnit unless the four unit axioms hold. Cross-checks the two readings of
/// weak normality and throws PropositionViolated if they disagree.
Normality normality_class(const TensorStructure& s, const UnitCandidate& u);

/// Opposite base, X⊗'Y = Y⊗X, α'_{X,Y,Z} = α_{Z,Y,X}, λ' = ρ, ρ' = λ.
std::pair<TensorStructure, UnitCandidate> reverse_structure(const TensorStructure& s,
                                                            const UnitCandidate& u);
TensorStructure reverse_tensor(const TensorStructure& s);

}  // namespace skewcheck
