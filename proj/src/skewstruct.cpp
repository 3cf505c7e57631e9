#include "skewcheck/skewstruct.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewcheck {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Pentagon: return "pentagon";
    case Axiom::LeftUnit: return "left";
    case Axiom::MidUnit: return "mid";
    case Axiom::RightUnit: return "right";
    case Axiom::UnitUnit: return "unitunit";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

AxiomMask AxiomMask::parse(std::string_view text) {
  AxiomMask mask = none();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view word = text.substr(pos, comma - pos);
    if (!word.empty()) {
      const auto it = std::find_if(kAxioms.begin(), kAxioms.end(),
                                   [&](Axiom a) { return axiom_name(a) == word; });
      if (it == kAxioms.end()) {
        throw Error(ErrorKind::ParseError, "--mask: unknown axiom '" + std::string(word) +
                                               "' (expected pentagon, left, mid, right, unitunit)");
      }
      mask = mask.with(*it);
    }
    pos = comma + 1;
  }
  return mask;
}

std::string AxiomMask::to_string() const {
  std::string out;
  for (Axiom a : kAxioms) {
    if (!has(a)) continue;
    if (!out.empty()) out += ',';
    out += axiom_name(a);
  }
  return out;
}

bool AxiomReport::all_pass() const {
  return std::all_of(statuses.begin(), statuses.end(), [](const AxiomStatus& s) { return s.ok(); });
}

int AxiomReport::passed() const {
  return static_cast<int>(std::count_if(statuses.begin(), statuses.end(),
                                        [](const AxiomStatus& s) { return s.status == Status::Pass; }));
}

int AxiomReport::enabled() const {
  return static_cast<int>(std::count_if(statuses.begin(), statuses.end(), [](const AxiomStatus& s) {
    return s.status != Status::Skipped;
  }));
}

namespace {

constexpr std::size_t kMaxReported = 64;

void push(std::vector<Violation>& out, ErrorKind kind, std::string message,
          std::vector<std::int32_t> ids) {
  if (out.size() < kMaxReported) out.push_back({kind, std::move(message), std::move(ids)});
}

Leg threefold_left(const TensorStructure& s) {
  return Leg{3,
             [&s](std::span<const ObjId> x) { return s.tensor(s.tensor(x[0], x[1]), x[2]); },
             [&s](std::span<const MorId> f) {
               return s.tensor_mor(s.tensor_mor(f[0], f[1]), f[2]);
             }};
}

Leg threefold_right(const TensorStructure& s) {
  return Leg{3,
             [&s](std::span<const ObjId> x) { return s.tensor(x[0], s.tensor(x[1], x[2])); },
             [&s](std::span<const MorId> f) {
               return s.tensor_mor(f[0], s.tensor_mor(f[1], f[2]));
             }};
}

}  // namespace

TensorStructure TensorStructure::make(CategoryPtr base, std::vector<ObjId> obj_tensor,
                                      std::vector<MorId> mor_tensor, std::vector<MorId> assoc) {
  const FinCategory& c = *base;
  const int n = c.object_count();
  const int m = c.morphism_count();
  std::vector<Violation> bad;

  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto mm = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  if (obj_tensor.size() != nn) {
    push(bad, ErrorKind::ShapeMismatch, "obj_tensor needs " + std::to_string(nn) + " entries", {});
  }
  if (mor_tensor.size() != mm) {
    push(bad, ErrorKind::ShapeMismatch, "mor_tensor needs " + std::to_string(mm) + " entries", {});
  }
  if (assoc.size() != nn * static_cast<std::size_t>(n)) {
    push(bad, ErrorKind::ShapeMismatch,
         "assoc needs " + std::to_string(nn * static_cast<std::size_t>(n)) + " entries", {});
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  for (std::size_t i = 0; i < nn; ++i) {
    if (obj_tensor[i] < kNoObject || obj_tensor[i] >= n) {
      push(bad, ErrorKind::UnknownObject, "obj_tensor entry is not an object",
           {static_cast<std::int32_t>(i) / n, static_cast<std::int32_t>(i) % n});
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  TensorStructure s;
  s.base_ = std::move(base);
  s.obj_tensor_ = std::move(obj_tensor);
  s.mor_tensor_ = std::move(mor_tensor);
  s.total_ = std::none_of(s.obj_tensor_.begin(), s.obj_tensor_.end(),
                          [](ObjId x) { return x == kNoObject; });
  s.degenerate_ = s.total_ && !s.obj_tensor_.empty() &&
                  std::all_of(s.obj_tensor_.begin(), s.obj_tensor_.end(),
                              [&](ObjId x) { return x == s.obj_tensor_.front(); });

  for (MorId f = 0; f < m; ++f) {
    for (MorId g = 0; g < m; ++g) {
      const ObjId a = s.tensor(c.src(f), c.src(g));
      const ObjId b = s.tensor(c.dst(f), c.dst(g));
      const MorId fg = s.tensor_mor(f, g);
      if (a == kNoObject || b == kNoObject) {
        if (fg != kNoMorphism) {
          push(bad, ErrorKind::ShapeMismatch, "f⊗g given where an endpoint tensor is undefined",
               {f, g});
        }
        continue;
      }
      if (fg < 0 || fg >= m || c.src(fg) != a || c.dst(fg) != b) {
        push(bad, ErrorKind::ShapeMismatch, "f⊗g missing or has the wrong endpoints", {f, g});
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      const ObjId xy = s.tensor(x, y);
      if (xy != kNoObject && s.tensor_mor(c.identity(x), c.identity(y)) != c.identity(xy)) {
        push(bad, ErrorKind::NotFunctorial, "1⊗1 is not an identity", {x, y});
      }
    }
  }
  // Functoriality in each variable separately, then interchange.
  for (MorId f = 0; f < m; ++f) {
    for (ObjId z = 0; z < n; ++z) {
      for (MorId g : c.hom(c.dst(f), z)) {
        const MorId gf = c.compose(g, f);
        for (ObjId y = 0; y < n; ++y) {
          const MorId one = c.identity(y);
          const MorId r1 = s.tensor_mor(gf, one);
          const MorId r2 = c.compose({s.tensor_mor(g, one), s.tensor_mor(f, one)});
          if (r1 != kNoMorphism && r2 != kNoMorphism && r1 != r2) {
            push(bad, ErrorKind::NotFunctorial, "(g∘f)⊗1 != (g⊗1)∘(f⊗1)", {g, f, y});
          }
          const MorId l1 = s.tensor_mor(one, gf);
          const MorId l2 = c.compose({s.tensor_mor(one, g), s.tensor_mor(one, f)});
          if (l1 != kNoMorphism && l2 != kNoMorphism && l1 != l2) {
            push(bad, ErrorKind::NotFunctorial, "1⊗(g∘f) != (1⊗g)∘(1⊗f)", {g, f, y});
          }
        }
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  if (const auto v = interchange_violation(s)) {
    push(bad, ErrorKind::NotFunctorial, "interchange law fails", {v->first, v->second});
    throw ValidationError(std::move(bad));
  }

  s.assoc_ = MorphismFamily::make(c, n, 3, std::move(assoc), [&s](std::span<const ObjId> x) {
    const ObjId a = s.tensor(s.tensor(x[0], x[1]), x[2]);
    const ObjId b = s.tensor(x[0], s.tensor(x[1], x[2]));
    if (a == kNoObject || b == kNoObject) return std::pair{kNoObject, kNoObject};
    return std::pair{a, b};
  });
  const auto gens = all_morphisms(c);
  const auto nat = is_natural(c, s.assoc_, threefold_left(s), threefold_right(s), &gens);
  if (!nat) {
    push(bad, ErrorKind::NotNatural, "associator is not natural", nat.witness);
    throw ValidationError(std::move(bad));
  }
  return s;
}

std::optional<std::pair<MorId, MorId>> interchange_violation(const TensorStructure& s) {
  const FinCategory& c = s.base();
  const int m = c.morphism_count();
  for (MorId f = 0; f < m; ++f) {
    for (MorId g = 0; g < m; ++g) {
      const MorId fg = s.tensor_mor(f, g);
      if (fg == kNoMorphism) continue;
      // f⊗g : A⊗B -> A'⊗B' factors through A'⊗B and through A⊗B'.
      const MorId via_right = c.compose({s.tensor_mor(c.identity(c.dst(f)), g),
                                         s.tensor_mor(f, c.identity(c.src(g)))});
      const MorId via_left = c.compose({s.tensor_mor(f, c.identity(c.dst(g))),
                                        s.tensor_mor(c.identity(c.src(f)), g)});
      if ((via_right != kNoMorphism && via_right != fg) ||
          (via_left != kNoMorphism && via_left != fg)) {
        return std::pair{f, g};
      }
    }
  }
  return std::nullopt;
}

Leg tensor_leg_left(const TensorStructure& s, ObjId c) {
  return Leg{1, [&s, c](std::span<const ObjId> x) { return s.tensor(c, x[0]); },
             [&s, c](std::span<const MorId> f) {
               return s.tensor_mor(s.base().identity(c), f[0]);
             }};
}

Leg tensor_leg_right(const TensorStructure& s, ObjId c) {
  return Leg{1, [&s, c](std::span<const ObjId> x) { return s.tensor(x[0], c); },
             [&s, c](std::span<const MorId> f) {
               return s.tensor_mor(f[0], s.base().identity(c));
             }};
}

namespace {

MorphismFamily lambda_family(const TensorStructure& s, ObjId unit, std::vector<MorId> comps) {
  const FinCategory& c = s.base();
  return MorphismFamily::make(c, c.object_count(), 1, std::move(comps),
                              [&s, unit](std::span<const ObjId> x) {
                                const ObjId ix = s.tensor(unit, x[0]);
                                if (ix == kNoObject) return std::pair{kNoObject, kNoObject};
                                return std::pair{ix, x[0]};
                              });
}

MorphismFamily rho_family(const TensorStructure& s, ObjId unit, std::vector<MorId> comps) {
  const FinCategory& c = s.base();
  return MorphismFamily::make(c, c.object_count(), 1, std::move(comps),
                              [&s, unit](std::span<const ObjId> x) {
                                const ObjId xi = s.tensor(x[0], unit);
                                if (xi == kNoObject) return std::pair{kNoObject, kNoObject};
                                return std::pair{x[0], xi};
                              });
}

MorId component(const MorphismFamily& fam, ObjId x) {
  return x == kNoObject ? kNoMorphism : fam.at(x);
}

}  // namespace

UnitCandidate UnitCandidate::make_unchecked(const TensorStructure& s, ObjId unit,
                                            std::vector<MorId> lambda, std::vector<MorId> rho) {
  if (unit < 0 || unit >= s.base().object_count()) {
    throw Error(ErrorKind::UnknownObject, "unit object " + std::to_string(unit));
  }
  UnitCandidate u;
  u.unit = unit;
  u.lambda = lambda_family(s, unit, std::move(lambda));
  u.rho = rho_family(s, unit, std::move(rho));
  return u;
}

UnitCandidate UnitCandidate::make(const TensorStructure& s, ObjId unit, std::vector<MorId> lambda,
                                  std::vector<MorId> rho) {
  UnitCandidate u = make_unchecked(s, unit, std::move(lambda), std::move(rho));
  std::vector<Violation> bad;
  if (const auto r = lambda_natural(s, u); !r) {
    push(bad, ErrorKind::NotNatural, "λ is not natural", r.witness);
  }
  if (const auto r = rho_natural(s, u); !r) {
    push(bad, ErrorKind::NotNatural, "ρ is not natural", r.witness);
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return u;
}

NaturalityResult lambda_natural(const TensorStructure& s, const UnitCandidate& u) {
  return is_natural(s.base(), u.lambda, tensor_leg_left(s, u.unit), identity_leg());
}

NaturalityResult rho_natural(const TensorStructure& s, const UnitCandidate& u) {
  return is_natural(s.base(), u.rho, identity_leg(), tensor_leg_right(s, u.unit));
}

namespace {

// Both sides of the pentagon at (w, x, y, z); false only on a definite mismatch.
bool pentagon_holds(const TensorStructure& s, ObjId w, ObjId x, ObjId y, ObjId z) {
  const FinCategory& c = s.base();
  const MorId lhs = c.compose({s.assoc(w, x, s.tensor(y, z)), s.assoc(s.tensor(w, x), y, z)});
  if (lhs == kNoMorphism) return true;
  const MorId rhs = c.compose({s.tensor_mor(c.identity(w), s.assoc(x, y, z)),
                               s.assoc(w, s.tensor(x, y), z),
                               s.tensor_mor(s.assoc(w, x, y), c.identity(z))});
  return rhs == kNoMorphism || lhs == rhs;
}

}  // namespace

AxiomStatus serial::check_pentagon(const TensorStructure& s) {
  const int n = s.base().object_count();
  for (ObjId w = 0; w < n; ++w) {
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) {
        for (ObjId z = 0; z < n; ++z) {
          if (!pentagon_holds(s, w, x, y, z)) return AxiomStatus::fail({w, x, y, z});
        }
      }
    }
  }
  return AxiomStatus::pass();
}

AxiomStatus check_pentagon(const TensorStructure& s) {
  const int n = s.base().object_count();
  const int outer = n * n;
  // First failing (y, z) per (w, x), or -1; the smallest flat index wins.
  std::vector<int> first(static_cast<std::size_t>(outer), -1);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < outer; ++t) {
    const ObjId w = t / n;
    const ObjId x = t % n;
    for (int inner = 0; inner < n * n; ++inner) {
      if (!pentagon_holds(s, w, x, inner / n, inner % n)) {
        first[static_cast<std::size_t>(t)] = inner;
        break;
      }
    }
  }
  for (int t = 0; t < outer; ++t) {
    const int inner = first[static_cast<std::size_t>(t)];
    if (inner >= 0) return AxiomStatus::fail({t / n, t % n, inner / n, inner % n});
  }
  return AxiomStatus::pass();
}

AxiomStatus check_left_unit(const TensorStructure& s, const UnitCandidate& u) {
  const FinCategory& c = s.base();
  const int n = c.object_count();
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      const MorId lhs = c.compose({component(u.lambda, s.tensor(x, y)), s.assoc(u.unit, x, y)});
      const MorId rhs = s.tensor_mor(u.lambda.at(x), c.identity(y));
      if (lhs != kNoMorphism && rhs != kNoMorphism && lhs != rhs) return AxiomStatus::fail({x, y});
    }
  }
  return AxiomStatus::pass();
}

AxiomStatus check_mid_unit(const TensorStructure& s, const UnitCandidate& u) {
  const FinCategory& c = s.base();
  const int n = c.object_count();
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      const ObjId xy = s.tensor(x, y);
      if (xy == kNoObject) continue;
      const MorId lhs = c.compose({s.tensor_mor(c.identity(x), u.lambda.at(y)),
                                   s.assoc(x, u.unit, y),
                                   s.tensor_mor(u.rho.at(x), c.identity(y))});
      if (lhs != kNoMorphism && lhs != c.identity(xy)) return AxiomStatus::fail({x, y});
    }
  }
  return AxiomStatus::pass();
}

AxiomStatus check_right_unit(const TensorStructure& s, const UnitCandidate& u) {
  const FinCategory& c = s.base();
  const int n = c.object_count();
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      const MorId lhs = c.compose({s.assoc(x, y, u.unit), component(u.rho, s.tensor(x, y))});
      const MorId rhs = s.tensor_mor(c.identity(x), u.rho.at(y));
      if (lhs != kNoMorphism && rhs != kNoMorphism && lhs != rhs) return AxiomStatus::fail({x, y});
    }
  }
  return AxiomStatus::pass();
}

AxiomStatus check_unit_unit(const TensorStructure& s, const UnitCandidate& u) {
  const FinCategory& c = s.base();
  const MorId composite = c.compose({u.lambda.at(u.unit), u.rho.at(u.unit)});
  if (composite != kNoMorphism && composite != c.identity(u.unit)) {
    return AxiomStatus::fail({u.unit});
  }
  return AxiomStatus::pass();
}

AxiomReport check_all(const TensorStructure& s, const UnitCandidate& u, AxiomMask enabled) {
  AxiomReport r;
  if (enabled.has(Axiom::Pentagon)) r[Axiom::Pentagon] = check_pentagon(s);
  if (enabled.has(Axiom::LeftUnit)) r[Axiom::LeftUnit] = check_left_unit(s, u);
  if (enabled.has(Axiom::MidUnit)) r[Axiom::MidUnit] = check_mid_unit(s, u);
  if (enabled.has(Axiom::RightUnit)) r[Axiom::RightUnit] = check_right_unit(s, u);
  if (enabled.has(Axiom::UnitUnit)) r[Axiom::UnitUnit] = check_unit_unit(s, u);
  return r;
}

Normality normality_class(const TensorStructure& s, const UnitCandidate& u) {
  const AxiomReport r = check_all(s, u, AxiomMask::unit_axioms());
  if (!r.all_pass()) {
    throw Error(ErrorKind::NotAUnit, "candidate at object " + std::to_string(u.unit) +
                                         " fails a unit axiom");
  }
  const FinCategory& c = s.base();
  const MorId lambda_i = u.lambda.at(u.unit);
  const MorId rho_i = u.rho.at(u.unit);

  Normality out;
  out.weakly_normal = c.is_iso(lambda_i);
  const bool retraction = c.compose(rho_i, lambda_i) == c.identity(s.tensor(u.unit, u.unit));
  if (retraction != out.weakly_normal) {
    throw Error(ErrorKind::PropositionViolated,
                "λ_I invertible = " + std::to_string(out.weakly_normal) + " but ρ_I∘λ_I = 1 is " +
                    std::to_string(retraction) + " at object " + std::to_string(u.unit));
  }
  const auto all_iso = [&](const MorphismFamily& fam) {
    return std::all_of(fam.components().begin(), fam.components().end(),
                       [&](MorId f) { return f == kNoMorphism || c.is_iso(f); });
  };
  out.left_normal = all_iso(u.lambda);
  out.right_normal = all_iso(u.rho);
  out.normal = out.left_normal && out.right_normal;
  return out;
}

TensorStructure reverse_tensor(const TensorStructure& s) {
  const FinCategory& c = s.base();
  const auto n = static_cast<std::size_t>(c.object_count());
  const auto m = static_cast<std::size_t>(c.morphism_count());
  std::vector<ObjId> obj(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) obj[x * n + y] = s.obj_tensor_table()[y * n + x];
  }
  std::vector<MorId> mor(m * m);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) mor[f * m + g] = s.mor_tensor_table()[g * m + f];
  }
  std::vector<MorId> assoc(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        assoc[(x * n + y) * n + z] = s.assoc_family().components()[(z * n + y) * n + x];
      }
    }
  }
  return TensorStructure::make(share(c.opposite()), std::move(obj), std::move(mor),
                               std::move(assoc));
}

std::pair<TensorStructure, UnitCandidate> reverse_structure(const TensorStructure& s,
                                                            const UnitCandidate& u) {
  TensorStructure r = reverse_tensor(s);
  UnitCandidate ru =
      UnitCandidate::make(r, u.unit, u.rho.components(), u.lambda.components());
  return {std::move(r), std::move(ru)};
}

}  // namespace skewcheck
