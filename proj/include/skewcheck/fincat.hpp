#pragma once

// Finite categories, functors, indexed morphism families and naturality.
//
// Objects and morphisms are dense integer ids. Composition is written
// compose(g, f) = "g after f" and is defined exactly when dst(f) == src(g).

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "skewcheck/error.hpp"

namespace skewcheck {

using ObjId = std::int32_t;
using MorId = std::int32_t;

inline constexpr ObjId kNoObject = -1;
inline constexpr MorId kNoMorphism = -1;

inline constexpr int kMaxObjects = 64;
inline constexpr int kMaxMorphisms = 4096;

/// Unvalidated tables, as read from a category description file.
struct RawCategory {
  int objects = 0;
  std::vector<std::array<ObjId, 2>> morphisms;  // [src, dst]
  std::vector<MorId> identities;                // one per object
  std::vector<std::array<MorId, 3>> comp;       // [g, f, g∘f]
};

class FinCategory {
 public:
  /// Checks every category law and the size caps. Throws ValidationError
  /// listing each violated law with the offending ids.
  static FinCategory validate(const RawCategory& raw);

  int object_count() const noexcept { return objects_; }
  int morphism_count() const noexcept { return static_cast<int>(src_.size()); }

  ObjId src(MorId f) const { return src_[static_cast<std::size_t>(f)]; }
  ObjId dst(MorId f) const { return dst_[static_cast<std::size_t>(f)]; }
  MorId identity(ObjId x) const { return identity_[static_cast<std::size_t>(x)]; }
  bool is_identity(MorId f) const { return identity(src(f)) == f; }

  /// g ∘ f, or kNoMorphism when dst(f) != src(g).
  MorId compose(MorId g, MorId f) const {
    return comp_[static_cast<std::size_t>(g) * src_.size() + static_cast<std::size_t>(f)];
  }
  /// compose({h, g, f}) = h ∘ g ∘ f. Propagates kNoMorphism.
  MorId compose(std::initializer_list<MorId> chain) const;

  /// Morphisms a -> b in increasing id order. Throws UnknownObject.
  std::span<const MorId> hom(ObjId a, ObjId b) const;

  /// Two-sided inverse found by exhaustive search of hom(dst f, src f).
  std::optional<MorId> inverse(MorId f) const;
  bool is_iso(MorId f) const { return inverse(f).has_value(); }

  FinCategory opposite() const;
  RawCategory to_raw() const;

  friend bool operator==(const FinCategory&, const FinCategory&) = default;

 private:
  FinCategory() = default;

  int objects_ = 0;
  std::vector<ObjId> src_;
  std::vector<ObjId> dst_;
  std::vector<MorId> identity_;
  std::vector<MorId> comp_;  // morphism_count² entries, kNoMorphism where undefined
  std::vector<std::vector<MorId>> hom_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

class FinFunctor {
 public:
  /// Throws ValidationError (NotFunctorial / ShapeMismatch) when the maps do
  /// not preserve src/dst, identities or composition.
  static FinFunctor make(CategoryPtr source, CategoryPtr target, std::vector<ObjId> obj_map,
                         std::vector<MorId> mor_map);
  static FinFunctor identity(CategoryPtr c);

  const FinCategory& source() const { return *source_; }
  const FinCategory& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }

  ObjId operator()(ObjId x) const { return obj_map_[static_cast<std::size_t>(x)]; }
  MorId map(MorId f) const { return mor_map_[static_cast<std::size_t>(f)]; }

  const std::vector<ObjId>& object_map() const { return obj_map_; }
  const std::vector<MorId>& morphism_map() const { return mor_map_; }

 private:
  FinFunctor() = default;

  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<ObjId> obj_map_;
  std::vector<MorId> mor_map_;
};

/// Every functor source -> target, in lexicographic order of (obj_map, mor_map).
std::vector<FinFunctor> all_functors(const CategoryPtr& source, const CategoryPtr& target);

/// A functor C^arity -> D given pointwise. Either map may return kNoObject /
/// kNoMorphism where the leg is undefined (partial tensors); such index
/// tuples are skipped by is_natural.
struct Leg {
  int arity = 1;
  std::function<ObjId(std::span<const ObjId>)> objects;
  std::function<MorId(std::span<const MorId>)> morphisms;
};

Leg identity_leg();

/// Components of a family indexed by arity-tuples of objects, stored in
/// lexicographic index order.
class MorphismFamily {
 public:
  /// Expected (src, dst) at an index; kNoObject marks an index outside the
  /// domain of a partial structure, where the component must be kNoMorphism.
  using Shape = std::function<std::pair<ObjId, ObjId>(std::span<const ObjId>)>;

  /// Throws ValidationError(ShapeMismatch) naming each bad index.
  static MorphismFamily make(const FinCategory& target, int index_objects, int arity,
                             std::vector<MorId> components, const Shape& shape);

  MorphismFamily() = default;

  int arity() const noexcept { return arity_; }
  int index_objects() const noexcept { return index_objects_; }
  std::size_t size() const noexcept { return components_.size(); }

  std::size_t flat_index(std::span<const ObjId> index) const;
  MorId at(std::span<const ObjId> index) const { return components_[flat_index(index)]; }
  MorId at(ObjId x) const { return components_[static_cast<std::size_t>(x)]; }
  MorId at(ObjId x, ObjId y) const {
    return components_[static_cast<std::size_t>(x) * static_cast<std::size_t>(index_objects_) +
                       static_cast<std::size_t>(y)];
  }
  MorId at(ObjId x, ObjId y, ObjId z) const {
    const auto n = static_cast<std::size_t>(index_objects_);
    return components_[(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n +
                       static_cast<std::size_t>(z)];
  }

  const std::vector<MorId>& components() const noexcept { return components_; }

  friend bool operator==(const MorphismFamily&, const MorphismFamily&) = default;

 private:
  int arity_ = 0;
  int index_objects_ = 0;
  std::vector<MorId> components_;
};

/// Calls fn(index) for every arity-tuple of objects 0..n-1 in lexicographic
/// order. fn returns false to stop early.
void for_each_index(int n, int arity, const std::function<bool(std::span<const ObjId>)>& fn);

struct NaturalityResult {
  bool natural = true;
  std::vector<MorId> witness;  // morphism tuple whose square fails
  explicit operator bool() const noexcept { return natural; }
};

/// Checks right(f) ∘ η_a == η_b ∘ left(f) for every morphism tuple f: a -> b
/// of index^arity. With `generators`, only tuples carrying one generator and
/// identities elsewhere are checked, which suffices when the generators
/// generate `index` under composition. Throws ShapeMismatch when a component
/// disagrees with the legs.
NaturalityResult is_natural(const FinCategory& index, const FinCategory& target,
                            const MorphismFamily& family, const Leg& left, const Leg& right,
                            const std::vector<MorId>* generators = nullptr);

inline NaturalityResult is_natural(const FinCategory& c, const MorphismFamily& family,
                                   const Leg& left, const Leg& right,
                                   const std::vector<MorId>* generators = nullptr) {
  return is_natural(c, c, family, left, right, generators);
}

/// All morphism ids of c, the default generating set.
std::vector<MorId> all_morphisms(const FinCategory& c);

}  // namespace skewcheck
