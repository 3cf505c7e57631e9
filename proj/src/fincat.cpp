#include "skewcheck/fincat.hpp"

#include <algorithm>
#include <string>

namespace skewcheck {

namespace {

constexpr std::size_t kMaxReportedViolations = 64;

std::string mor_name(MorId f) { return "#" + std::to_string(f); }

void push(std::vector<Violation>& out, ErrorKind kind, std::string message,
          std::vector<std::int32_t> ids) {
  if (out.size() < kMaxReportedViolations) {
    out.push_back({kind, std::move(message), std::move(ids)});
  }
}

}  // namespace

FinCategory FinCategory::validate(const RawCategory& raw) {
  std::vector<Violation> bad;
  const int n = raw.objects;
  const int m = static_cast<int>(raw.morphisms.size());

  if (n < 0) push(bad, ErrorKind::MalformedTable, "negative object count", {});
  if (n > kMaxObjects) {
    push(bad, ErrorKind::CapExceeded,
         std::to_string(n) + " objects exceeds cap " + std::to_string(kMaxObjects), {});
  }
  if (m > kMaxMorphisms) {
    push(bad, ErrorKind::CapExceeded,
         std::to_string(m) + " morphisms exceeds cap " + std::to_string(kMaxMorphisms), {});
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  auto valid_obj = [n](ObjId x) { return x >= 0 && x < n; };
  auto valid_mor = [m](MorId f) { return f >= 0 && f < m; };

  for (int f = 0; f < m; ++f) {
    const auto [s, d] = raw.morphisms[static_cast<std::size_t>(f)];
    if (!valid_obj(s) || !valid_obj(d)) {
      push(bad, ErrorKind::MalformedTable, "morphism " + mor_name(f) + " has unknown endpoint",
           {f});
    }
  }
  if (static_cast<int>(raw.identities.size()) != n) {
    push(bad, ErrorKind::BadIdentity,
         "expected " + std::to_string(n) + " identities, got " +
             std::to_string(raw.identities.size()),
         {});
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  for (int x = 0; x < n; ++x) {
    const MorId id = raw.identities[static_cast<std::size_t>(x)];
    if (!valid_mor(id)) {
      push(bad, ErrorKind::BadIdentity, "identity of object " + std::to_string(x) + " unknown",
           {id});
      continue;
    }
    const auto [s, d] = raw.morphisms[static_cast<std::size_t>(id)];
    if (s != x || d != x) {
      push(bad, ErrorKind::BadIdentity,
           "identity " + mor_name(id) + " of object " + std::to_string(x) + " is not an endomorphism of it",
           {id});
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  FinCategory c;
  c.objects_ = n;
  c.src_.resize(static_cast<std::size_t>(m));
  c.dst_.resize(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) {
    c.src_[static_cast<std::size_t>(f)] = raw.morphisms[static_cast<std::size_t>(f)][0];
    c.dst_[static_cast<std::size_t>(f)] = raw.morphisms[static_cast<std::size_t>(f)][1];
  }
  c.identity_ = raw.identities;
  c.comp_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), kNoMorphism);

  for (const auto& [g, f, r] : raw.comp) {
    if (!valid_mor(g) || !valid_mor(f) || !valid_mor(r)) {
      push(bad, ErrorKind::MalformedTable, "composite entry references unknown morphism", {g, f, r});
      continue;
    }
    if (c.dst(f) != c.src(g)) {
      push(bad, ErrorKind::MalformedTable,
           "composite " + mor_name(g) + "∘" + mor_name(f) + " declared for a non-composable pair",
           {g, f});
      continue;
    }
    if (c.src(r) != c.src(f) || c.dst(r) != c.dst(g)) {
      push(bad, ErrorKind::MalformedTable,
           "composite " + mor_name(g) + "∘" + mor_name(f) + " = " + mor_name(r) +
               " has the wrong endpoints",
           {g, f, r});
      continue;
    }
    MorId& slot = c.comp_[static_cast<std::size_t>(g) * static_cast<std::size_t>(m) +
                          static_cast<std::size_t>(f)];
    if (slot != kNoMorphism && slot != r) {
      push(bad, ErrorKind::MalformedTable,
           "composite " + mor_name(g) + "∘" + mor_name(f) + " declared twice with different values",
           {g, f});
      continue;
    }
    slot = r;
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  c.hom_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (int f = 0; f < m; ++f) {
    c.hom_[static_cast<std::size_t>(c.src(f)) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(c.dst(f))]
        .push_back(f);
  }

  // Every composable pair needs a composite.
  for (int f = 0; f < m; ++f) {
    for (ObjId z = 0; z < n; ++z) {
      for (MorId g : c.hom(c.dst(f), z)) {
        if (c.compose(g, f) == kNoMorphism) {
          push(bad, ErrorKind::UndefinedComposite,
               "composite " + mor_name(g) + "∘" + mor_name(f) + " is undefined", {g, f});
        }
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  for (int f = 0; f < m; ++f) {
    if (c.compose(c.identity(c.dst(f)), f) != f || c.compose(f, c.identity(c.src(f))) != f) {
      push(bad, ErrorKind::BadIdentity, "identity law fails at " + mor_name(f), {f});
    }
  }

  for (int f = 0; f < m; ++f) {
    for (ObjId y = 0; y < n; ++y) {
      for (MorId g : c.hom(c.dst(f), y)) {
        const MorId gf = c.compose(g, f);
        for (ObjId z = 0; z < n; ++z) {
          for (MorId h : c.hom(y, z)) {
            if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
              push(bad, ErrorKind::NonAssociative,
                   "(" + mor_name(h) + "∘" + mor_name(g) + ")∘" + mor_name(f) + " != " +
                       mor_name(h) + "∘(" + mor_name(g) + "∘" + mor_name(f) + ")",
                   {h, g, f});
            }
          }
        }
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return c;
}

MorId FinCategory::compose(std::initializer_list<MorId> chain) const {
  MorId acc = kNoMorphism;
  bool first = true;
  // Fold from the right: the last entry acts first.
  for (auto it = std::rbegin(chain); it != std::rend(chain); ++it) {
    if (*it == kNoMorphism) return kNoMorphism;
    if (first) {
      acc = *it;
      first = false;
      continue;
    }
    acc = compose(*it, acc);
    if (acc == kNoMorphism) return kNoMorphism;
  }
  return acc;
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  if (a < 0 || a >= objects_ || b < 0 || b >= objects_) {
    throw Error(ErrorKind::UnknownObject,
                "hom(" + std::to_string(a) + ", " + std::to_string(b) + ") with " +
                    std::to_string(objects_) + " objects");
  }
  return hom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(objects_) +
              static_cast<std::size_t>(b)];
}

std::optional<MorId> FinCategory::inverse(MorId f) const {
  for (MorId g : hom(dst(f), src(f))) {
    if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(dst(f))) return g;
  }
  return std::nullopt;
}

FinCategory FinCategory::opposite() const {
  FinCategory op;
  op.objects_ = objects_;
  op.src_ = dst_;
  op.dst_ = src_;
  op.identity_ = identity_;
  const auto m = src_.size();
  op.comp_.assign(m * m, kNoMorphism);
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) op.comp_[g * m + f] = comp_[f * m + g];
  }
  const auto n = static_cast<std::size_t>(objects_);
  op.hom_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) op.hom_[a * n + b] = hom_[b * n + a];
  }
  return op;
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  const auto m = static_cast<MorId>(src_.size());
  for (MorId f = 0; f < m; ++f) raw.morphisms.push_back({src(f), dst(f)});
  raw.identities = identity_;
  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      const MorId r = compose(g, f);
      if (r != kNoMorphism) raw.comp.push_back({g, f, r});
    }
  }
  return raw;
}

FinFunctor FinFunctor::make(CategoryPtr source, CategoryPtr target, std::vector<ObjId> obj_map,
                            std::vector<MorId> mor_map) {
  std::vector<Violation> bad;
  const FinCategory& s = *source;
  const FinCategory& t = *target;
  if (static_cast<int>(obj_map.size()) != s.object_count() ||
      static_cast<int>(mor_map.size()) != s.morphism_count()) {
    push(bad, ErrorKind::ShapeMismatch, "functor table sizes do not match the source category", {});
    throw ValidationError(std::move(bad));
  }
  for (ObjId x = 0; x < s.object_count(); ++x) {
    const ObjId fx = obj_map[static_cast<std::size_t>(x)];
    if (fx < 0 || fx >= t.object_count()) {
      push(bad, ErrorKind::UnknownObject, "object " + std::to_string(x) + " maps outside the target",
           {x});
    }
  }
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    const MorId ff = mor_map[static_cast<std::size_t>(f)];
    if (ff < 0 || ff >= t.morphism_count()) {
      push(bad, ErrorKind::MalformedTable, "morphism " + mor_name(f) + " maps outside the target", {f});
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  auto F = [&](ObjId x) { return obj_map[static_cast<std::size_t>(x)]; };
  auto Fm = [&](MorId f) { return mor_map[static_cast<std::size_t>(f)]; };
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    if (t.src(Fm(f)) != F(s.src(f)) || t.dst(Fm(f)) != F(s.dst(f))) {
      push(bad, ErrorKind::ShapeMismatch, "F(" + mor_name(f) + ") has the wrong endpoints", {f});
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  for (ObjId x = 0; x < s.object_count(); ++x) {
    if (Fm(s.identity(x)) != t.identity(F(x))) {
      push(bad, ErrorKind::NotFunctorial, "identity of object " + std::to_string(x) + " not preserved",
           {s.identity(x)});
    }
  }
  for (MorId g = 0; g < s.morphism_count(); ++g) {
    for (MorId f = 0; f < s.morphism_count(); ++f) {
      const MorId gf = s.compose(g, f);
      if (gf == kNoMorphism) continue;
      if (Fm(gf) != t.compose(Fm(g), Fm(f))) {
        push(bad, ErrorKind::NotFunctorial,
             "F(" + mor_name(g) + "∘" + mor_name(f) + ") != F(" + mor_name(g) + ")∘F(" +
                 mor_name(f) + ")",
             {g, f});
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  FinFunctor out;
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  out.obj_map_ = std::move(obj_map);
  out.mor_map_ = std::move(mor_map);
  return out;
}

FinFunctor FinFunctor::identity(CategoryPtr c) {
  std::vector<ObjId> objs(static_cast<std::size_t>(c->object_count()));
  std::vector<MorId> mors(static_cast<std::size_t>(c->morphism_count()));
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<ObjId>(i);
  for (std::size_t i = 0; i < mors.size(); ++i) mors[i] = static_cast<MorId>(i);
  return make(c, c, std::move(objs), std::move(mors));
}

namespace {

struct FunctorSearch {
  const CategoryPtr& source;
  const CategoryPtr& target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
  std::vector<FinFunctor>& out;

  bool consistent_up_to(MorId last) const {
    const FinCategory& s = *source;
    const FinCategory& t = *target;
    for (MorId g = 0; g <= last; ++g) {
      for (MorId f = 0; f <= last; ++f) {
        if (g != last && f != last) continue;
        const MorId gf = s.compose(g, f);
        if (gf == kNoMorphism || gf > last) continue;
        if (mor_map[static_cast<std::size_t>(gf)] !=
            t.compose(mor_map[static_cast<std::size_t>(g)], mor_map[static_cast<std::size_t>(f)])) {
          return false;
        }
      }
    }
    // Composites of earlier pairs that land on `last`.
    for (MorId g = 0; g < last; ++g) {
      for (MorId f = 0; f < last; ++f) {
        if (s.compose(g, f) != last) continue;
        if (mor_map[static_cast<std::size_t>(last)] !=
            t.compose(mor_map[static_cast<std::size_t>(g)], mor_map[static_cast<std::size_t>(f)])) {
          return false;
        }
      }
    }
    return true;
  }

  void morphisms(MorId f) {
    const FinCategory& s = *source;
    const FinCategory& t = *target;
    if (f == s.morphism_count()) {
      out.push_back(FinFunctor::make(source, target, obj_map, mor_map));
      return;
    }
    const ObjId a = obj_map[static_cast<std::size_t>(s.src(f))];
    const ObjId b = obj_map[static_cast<std::size_t>(s.dst(f))];
    if (s.is_identity(f)) {
      mor_map[static_cast<std::size_t>(f)] = t.identity(a);
      if (consistent_up_to(f)) morphisms(f + 1);
      return;
    }
    for (MorId candidate : t.hom(a, b)) {
      mor_map[static_cast<std::size_t>(f)] = candidate;
      if (consistent_up_to(f)) morphisms(f + 1);
    }
  }

  void objects(ObjId x) {
    if (x == source->object_count()) {
      morphisms(0);
      return;
    }
    for (ObjId y = 0; y < target->object_count(); ++y) {
      obj_map[static_cast<std::size_t>(x)] = y;
      objects(x + 1);
    }
  }
};

}  // namespace

std::vector<FinFunctor> all_functors(const CategoryPtr& source, const CategoryPtr& target) {
  std::vector<FinFunctor> out;
  FunctorSearch search{source, target,
                       std::vector<ObjId>(static_cast<std::size_t>(source->object_count())),
                       std::vector<MorId>(static_cast<std::size_t>(source->morphism_count())),
                       out};
  search.objects(0);
  return out;
}

Leg identity_leg() {
  return Leg{1, [](std::span<const ObjId> x) { return x[0]; },
             [](std::span<const MorId> f) { return f[0]; }};
}

std::size_t MorphismFamily::flat_index(std::span<const ObjId> index) const {
  std::size_t flat = 0;
  for (ObjId x : index) {
    flat = flat * static_cast<std::size_t>(index_objects_) + static_cast<std::size_t>(x);
  }
  return flat;
}

void for_each_index(int n, int arity, const std::function<bool(std::span<const ObjId>)>& fn) {
  if (n <= 0) return;
  std::vector<ObjId> index(static_cast<std::size_t>(arity), 0);
  while (true) {
    if (!fn(index)) return;
    int pos = arity - 1;
    while (pos >= 0) {
      if (++index[static_cast<std::size_t>(pos)] < n) break;
      index[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

MorphismFamily MorphismFamily::make(const FinCategory& target, int index_objects, int arity,
                                    std::vector<MorId> components, const Shape& shape) {
  std::size_t expected = 1;
  for (int i = 0; i < arity; ++i) expected *= static_cast<std::size_t>(index_objects);
  if (components.size() != expected) {
    throw ValidationError({{ErrorKind::ShapeMismatch,
                            "family needs " + std::to_string(expected) + " components, got " +
                                std::to_string(components.size()),
                            {}}});
  }
  MorphismFamily fam;
  fam.arity_ = arity;
  fam.index_objects_ = index_objects;
  fam.components_ = std::move(components);

  std::vector<Violation> bad;
  for_each_index(index_objects, arity, [&](std::span<const ObjId> idx) {
    const auto [s, d] = shape(idx);
    const MorId f = fam.at(idx);
    std::vector<std::int32_t> ids(idx.begin(), idx.end());
    if (s == kNoObject || d == kNoObject) {
      if (f != kNoMorphism) {
        push(bad, ErrorKind::ShapeMismatch, "component given outside the structure's domain", ids);
      }
      return true;
    }
    if (f < 0 || f >= target.morphism_count()) {
      push(bad, ErrorKind::ShapeMismatch, "component missing or unknown", ids);
    } else if (target.src(f) != s || target.dst(f) != d) {
      push(bad, ErrorKind::ShapeMismatch,
           "component " + mor_name(f) + " has endpoints (" + std::to_string(target.src(f)) + ", " +
               std::to_string(target.dst(f)) + "), expected (" + std::to_string(s) + ", " +
               std::to_string(d) + ")",
           ids);
    }
    return true;
  });
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return fam;
}

std::vector<MorId> all_morphisms(const FinCategory& c) {
  std::vector<MorId> out(static_cast<std::size_t>(c.morphism_count()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<MorId>(i);
  return out;
}

namespace {

// Checks one naturality square; returns false on failure.
bool square_commutes(const FinCategory& index, const FinCategory& target,
                     const MorphismFamily& family, const Leg& left, const Leg& right,
                     std::span<const MorId> tuple, std::vector<ObjId>& a, std::vector<ObjId>& b) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    a[i] = index.src(tuple[i]);
    b[i] = index.dst(tuple[i]);
  }
  const MorId eta_a = family.at(a);
  const MorId eta_b = family.at(b);
  const MorId left_f = left.morphisms(tuple);
  const MorId right_f = right.morphisms(tuple);
  if (eta_a == kNoMorphism || eta_b == kNoMorphism || left_f == kNoMorphism ||
      right_f == kNoMorphism) {
    return true;  // outside a partial structure's domain
  }
  return target.compose(right_f, eta_a) == target.compose(eta_b, left_f);
}

}  // namespace

NaturalityResult is_natural(const FinCategory& index, const FinCategory& target,
                            const MorphismFamily& family, const Leg& left, const Leg& right,
                            const std::vector<MorId>* generators) {
  const int k = family.arity();
  const int n = index.object_count();

  std::vector<Violation> bad;
  for_each_index(n, k, [&](std::span<const ObjId> idx) {
    const MorId f = family.at(idx);
    const ObjId ls = left.objects(idx);
    const ObjId rd = right.objects(idx);
    if (f == kNoMorphism) {
      if (ls != kNoObject && rd != kNoObject) {
        push(bad, ErrorKind::ShapeMismatch, "missing component",
             std::vector<std::int32_t>(idx.begin(), idx.end()));
      }
      return true;
    }
    if (target.src(f) != ls || target.dst(f) != rd) {
      push(bad, ErrorKind::ShapeMismatch, "component " + mor_name(f) + " disagrees with the legs",
           std::vector<std::int32_t>(idx.begin(), idx.end()));
    }
    return true;
  });
  if (!bad.empty()) throw ValidationError(std::move(bad));

  NaturalityResult result;
  std::vector<MorId> tuple(static_cast<std::size_t>(k));
  std::vector<ObjId> a(static_cast<std::size_t>(k));
  std::vector<ObjId> b(static_cast<std::size_t>(k));

  if (generators != nullptr) {
    // One generator in one slot, identities elsewhere.
    for (int slot = 0; slot < k; ++slot) {
      bool stop = false;
      for (MorId g : *generators) {
        for_each_index(n, k - 1, [&](std::span<const ObjId> rest) {
          std::size_t r = 0;
          for (int i = 0; i < k; ++i) {
            tuple[static_cast<std::size_t>(i)] = (i == slot) ? g : index.identity(rest[r++]);
          }
          if (!square_commutes(index, target, family, left, right, tuple, a, b)) {
            result.natural = false;
            result.witness = tuple;
            stop = true;
            return false;
          }
          return true;
        });
        if (k == 1 && !stop) {
          tuple[0] = g;
          if (!square_commutes(index, target, family, left, right, tuple, a, b)) {
            result.natural = false;
            result.witness = tuple;
            stop = true;
          }
        }
        if (stop) return result;
      }
    }
    return result;
  }

  const int m = index.morphism_count();
  for_each_index(m, k, [&](std::span<const ObjId> mors) {
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = mors[static_cast<std::size_t>(i)];
    if (!square_commutes(index, target, family, left, right, tuple, a, b)) {
      result.natural = false;
      result.witness = tuple;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace skewcheck
