#include "skewcheck/monfun.hpp"

#include <string>

#include "skewcheck/units.hpp"

namespace skewcheck {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorKind::PropositionViolated, what);
}

}  // namespace

MonoidalFunctorData MonoidalFunctorData::make(std::shared_ptr<const SkewMonoidal> source,
                                              std::shared_ptr<const SkewMonoidal> target,
                                              FinFunctor functor, std::vector<MorId> phi,
                                              MorId f0) {
  const TensorStructure& s = source->tensor;
  const TensorStructure& t = target->tensor;
  if (!s.total() || !t.total()) {
    throw Error(ErrorKind::PreconditionUnmet, "monoidal functors need total tensors");
  }
  if (!(functor.source() == s.base()) || !(functor.target() == t.base())) {
    throw Error(ErrorKind::ShapeMismatch, "functor does not run between the two base categories");
  }
  const FinCategory& d = t.base();
  MonoidalFunctorData out{std::move(source), std::move(target), std::move(functor), {}, f0};
  const FinFunctor& F = out.functor;
  out.phi = MorphismFamily::make(d, s.base().object_count(), 2, std::move(phi),
                                 [&](std::span<const ObjId> x) {
                                   return std::pair{t.tensor(F(x[0]), F(x[1])),
                                                    F(s.tensor(x[0], x[1]))};
                                 });
  if (f0 != kNoMorphism) {
    if (f0 < 0 || f0 >= d.morphism_count() || d.src(f0) != out.target->unit.unit ||
        d.dst(f0) != F(out.source->unit.unit)) {
      throw Error(ErrorKind::ShapeMismatch, "F0 must be a morphism J -> F(I)");
    }
  }
  const Leg left{2, [&](std::span<const ObjId> x) { return t.tensor(F(x[0]), F(x[1])); },
                 [&](std::span<const MorId> f) { return t.tensor_mor(F.map(f[0]), F.map(f[1])); }};
  const Leg right{2, [&](std::span<const ObjId> x) { return F(s.tensor(x[0], x[1])); },
                  [&](std::span<const MorId> f) { return F.map(s.tensor_mor(f[0], f[1])); }};
  const auto gens = all_morphisms(s.base());
  const auto nat = is_natural(s.base(), d, out.phi, left, right, &gens);
  if (!nat) {
    throw ValidationError({{ErrorKind::NotNatural, "φ is not natural", nat.witness}});
  }
  return out;
}

std::optional<std::vector<ObjId>> hexagon_violation(const MonoidalFunctorData& data) {
  const TensorStructure& s = data.source->tensor;
  const TensorStructure& t = data.target->tensor;
  const FinCategory& d = t.base();
  const FinFunctor& F = data.functor;
  const auto& phi = data.phi;
  const int n = s.base().object_count();
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) {
        const MorId lhs = d.compose({phi.at(x, s.tensor(y, z)),
                                     t.tensor_mor(d.identity(F(x)), phi.at(y, z)),
                                     t.assoc(F(x), F(y), F(z))});
        const MorId rhs = d.compose({F.map(s.assoc(x, y, z)), phi.at(s.tensor(x, y), z),
                                     t.tensor_mor(phi.at(x, y), d.identity(F(z)))});
        if (lhs != rhs) return std::vector<ObjId>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

std::optional<ObjId> unit_square_violation(const MonoidalFunctorData& data, MorId f0) {
  const SkewMonoidal& src = *data.source;
  const SkewMonoidal& dst = *data.target;
  const TensorStructure& s = src.tensor;
  const TensorStructure& t = dst.tensor;
  const FinCategory& d = t.base();
  const FinFunctor& F = data.functor;
  const ObjId i = src.unit.unit;
  for (ObjId x = 0; x < s.base().object_count(); ++x) {
    const MorId left = d.compose({F.map(src.unit.lambda.at(x)), data.phi.at(i, x),
                                  t.tensor_mor(f0, d.identity(F(x)))});
    if (left != dst.unit.lambda.at(F(x))) return x;
    const MorId right = d.compose({data.phi.at(x, i), t.tensor_mor(d.identity(F(x)), f0),
                                   dst.unit.rho.at(F(x))});
    if (right != F.map(src.unit.rho.at(x))) return x;
  }
  return std::nullopt;
}

MonoidalReport check_monoidal_functor(const MonoidalFunctorData& d) {
  MonoidalReport r;
  const auto hex = hexagon_violation(d);
  r.assoc_ok = !hex;
  if (hex) r.assoc_witness = *hex;
  if (d.f0 == kNoMorphism) return r;
  const auto unit = unit_square_violation(d, d.f0);
  r.unit_ok = !unit;
  if (unit) r.unit_witness = {*unit};
  return r;
}

std::vector<MorId> enumerate_unit_maps(const MonoidalFunctorData& d) {
  if (hexagon_violation(d)) {
    throw Error(ErrorKind::PreconditionUnmet, "the associativity hexagon fails for (F, φ)");
  }
  const FinCategory& c = d.target->tensor.base();
  std::vector<MorId> out;
  for (MorId f : c.hom(d.target->unit.unit, d.functor(d.source->unit.unit))) {
    if (!unit_square_violation(d, f)) out.push_back(f);
  }
  if (out.size() > 1) {
    std::string list;
    for (MorId f : out) list += " #" + std::to_string(f);
    violated("more than one unit map F0:" + list);
  }
  return out;
}

Classification classify(const MonoidalFunctorData& d) {
  const MonoidalReport r = check_monoidal_functor(d);
  if (!r.assoc_ok || !r.unit_ok) {
    throw Error(ErrorKind::PreconditionUnmet, "not a monoidal functor");
  }
  const FinCategory& c = d.target->tensor.base();
  Classification out;
  out.normal = c.is_iso(d.f0);
  bool phi_iso = true;
  for (MorId f : d.phi.components()) phi_iso = phi_iso && c.is_iso(f);
  out.strong = out.normal && phi_iso;
  return out;
}

bool transported_unit_agreement(const MonoidalFunctorData& d) {
  const TensorStructure& t = d.target->tensor;
  const FinCategory& c = t.base();
  const auto inv = d.f0 == kNoMorphism ? std::nullopt : c.inverse(d.f0);
  if (!inv) throw Error(ErrorKind::NotAnIsomorphism, "F0 is not invertible");
  const UnitCandidate& u = d.target->unit;
  const UnitCandidate on_fi = transport_unit(t, u, *inv, d.f0);
  const MorId phi = canonical_morphism(t, u, on_fi);
  if (phi != d.f0) {
    violated("canonical morphism #" + std::to_string(phi) + " from J to F(I) differs from F0 #" +
             std::to_string(d.f0));
  }
  return true;
}

}  // namespace skewcheck
