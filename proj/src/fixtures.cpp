#include "skewcheck/fixtures.hpp"

#include <algorithm>

namespace skewcheck::fixtures {

namespace {

// Category on n objects whose non-identity morphisms are `arrows`, for
// preorders: composites are looked up by endpoints.
CategoryPtr thin_category(int n, const std::vector<std::array<ObjId, 2>>& arrows) {
  RawCategory raw;
  raw.objects = n;
  for (ObjId x = 0; x < n; ++x) {
    raw.morphisms.push_back({x, x});
    raw.identities.push_back(x);
  }
  for (const auto& a : arrows) raw.morphisms.push_back(a);
  const auto find = [&](ObjId a, ObjId b) {
    for (std::size_t f = 0; f < raw.morphisms.size(); ++f) {
      if (raw.morphisms[f][0] == a && raw.morphisms[f][1] == b) return static_cast<MorId>(f);
    }
    return kNoMorphism;
  };
  const auto m = static_cast<MorId>(raw.morphisms.size());
  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      const auto [fs, fd] = raw.morphisms[static_cast<std::size_t>(f)];
      const auto [gs, gd] = raw.morphisms[static_cast<std::size_t>(g)];
      if (fd == gs) raw.comp.push_back({g, f, find(fs, gd)});
    }
  }
  return share(FinCategory::validate(raw));
}

MorId only(const FinCategory& c, ObjId a, ObjId b) {
  const auto h = c.hom(a, b);
  if (h.size() != 1) {
    throw Error(ErrorKind::PreconditionUnmet,
                "hom(" + std::to_string(a) + ", " + std::to_string(b) + ") has " +
                    std::to_string(h.size()) + " elements, expected 1");
  }
  return h.front();
}

FinFunctor functor_on_objects(CategoryPtr s, CategoryPtr t, std::vector<ObjId> objs) {
  // Thin target: every morphism is determined by its endpoints.
  std::vector<MorId> mors;
  for (MorId f = 0; f < s->morphism_count(); ++f) {
    mors.push_back(only(*t, objs[static_cast<std::size_t>(s->src(f))],
                        objs[static_cast<std::size_t>(s->dst(f))]));
  }
  return FinFunctor::make(std::move(s), std::move(t), std::move(objs), std::move(mors));
}

// φ forced by endpoints in a thin target.
std::vector<MorId> thin_phi(const SkewMonoidal& src, const SkewMonoidal& dst, const FinFunctor& F) {
  const int n = src.tensor.base().object_count();
  std::vector<MorId> phi;
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      phi.push_back(only(dst.tensor.base(), dst.tensor.tensor(F(x), F(y)),
                         F(src.tensor.tensor(x, y))));
    }
  }
  return phi;
}

MonoidalFunctorData thin_functor(const std::shared_ptr<const SkewMonoidal>& src,
                                 const std::shared_ptr<const SkewMonoidal>& dst,
                                 std::vector<ObjId> objs) {
  FinFunctor F = functor_on_objects(src->tensor.base_ptr(), dst->tensor.base_ptr(), std::move(objs));
  auto phi = thin_phi(*src, *dst, F);
  const FinCategory& d = dst->tensor.base();
  const auto h = d.hom(dst->unit.unit, F(src->unit.unit));
  const MorId f0 = h.empty() ? kNoMorphism : h.front();
  return MonoidalFunctorData::make(src, dst, std::move(F), std::move(phi), f0);
}

}  // namespace

CategoryPtr terminal_category() { return thin_category(1, {}); }

CategoryPtr codiscrete(int n) {
  std::vector<std::array<ObjId, 2>> arrows;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      if (a != b) arrows.push_back({a, b});
    }
  }
  return thin_category(n, arrows);
}

CategoryPtr discrete(int n) { return thin_category(n, {}); }

CategoryPtr chain(int n) {
  std::vector<std::array<ObjId, 2>> arrows;
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = a + 1; b < n; ++b) arrows.push_back({a, b});
  }
  return thin_category(n, arrows);
}

CategoryPtr monoid(int k, const std::vector<int>& table) {
  RawCategory raw;
  raw.objects = 1;
  raw.identities = {0};
  for (int i = 0; i < k; ++i) raw.morphisms.push_back({0, 0});
  for (int g = 0; g < k; ++g) {
    for (int f = 0; f < k; ++f) raw.comp.push_back({g, f, table[static_cast<std::size_t>(g * k + f)]});
  }
  return share(FinCategory::validate(raw));
}

TensorStructure thin_structure(CategoryPtr c, std::vector<ObjId> obj_tensor) {
  const int n = c->object_count();
  const int m = c->morphism_count();
  const auto t = [&](ObjId x, ObjId y) {
    return obj_tensor[static_cast<std::size_t>(x * n + y)];
  };
  std::vector<MorId> mor;
  for (MorId f = 0; f < m; ++f) {
    for (MorId g = 0; g < m; ++g) {
      mor.push_back(only(*c, t(c->src(f), c->src(g)), t(c->dst(f), c->dst(g))));
    }
  }
  std::vector<MorId> assoc;
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) assoc.push_back(only(*c, t(t(x, y), z), t(x, t(y, z))));
    }
  }
  return TensorStructure::make(std::move(c), std::move(obj_tensor), std::move(mor),
                               std::move(assoc));
}

UnitCandidate thin_unit(const TensorStructure& s, ObjId unit) {
  const FinCategory& c = s.base();
  std::vector<MorId> lambda;
  std::vector<MorId> rho;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    lambda.push_back(only(c, s.tensor(unit, x), x));
    rho.push_back(only(c, x, s.tensor(x, unit)));
  }
  return UnitCandidate::make(s, unit, std::move(lambda), std::move(rho));
}

SkewMonoidal terminal() {
  TensorStructure s = thin_structure(terminal_category(), {0});
  UnitCandidate u = thin_unit(s, 0);
  return {std::move(s), std::move(u)};
}

TensorStructure codisc2() { return thin_structure(codiscrete(2), {0, 0, 0, 0}); }

TensorStructure bz2() {
  auto c = monoid(2, {0, 1, 1, 0});
  return TensorStructure::make(c, {0}, {0, 1, 1, 0}, {0});
}

MorId bz2_s() { return 1; }

UnitCandidate bz2_unit(bool twisted) {
  const MorId f = twisted ? bz2_s() : 0;
  return UnitCandidate::make(bz2(), 0, {f}, {f});
}

TensorStructure discrete2_projection() { return thin_structure(discrete(2), {0, 0, 1, 1}); }

SkewMonoidal disc2_join() {
  TensorStructure s = thin_structure(discrete(2), {0, 1, 1, 1});
  UnitCandidate u = thin_unit(s, 0);
  return {std::move(s), std::move(u)};
}

SkewMonoidal chain3_max() {
  std::vector<ObjId> t;
  for (ObjId x = 0; x < 3; ++x) {
    for (ObjId y = 0; y < 3; ++y) t.push_back(std::max(x, y));
  }
  TensorStructure s = thin_structure(chain(3), std::move(t));
  UnitCandidate u = thin_unit(s, 0);
  return {std::move(s), std::move(u)};
}

SkewMonoidal chain3_plus() {
  std::vector<ObjId> t;
  for (ObjId x = 0; x < 3; ++x) {
    for (ObjId y = 0; y < 3; ++y) t.push_back(std::min(2, x + y));
  }
  TensorStructure s = thin_structure(chain(3), std::move(t));
  UnitCandidate u = thin_unit(s, 0);
  return {std::move(s), std::move(u)};
}

SkewMonoidal chain3_second_projection() {
  std::vector<ObjId> t;
  for (ObjId x = 0; x < 3; ++x) {
    for (ObjId y = 0; y < 3; ++y) t.push_back(y);
  }
  TensorStructure s = thin_structure(chain(3), std::move(t));
  UnitCandidate u = thin_unit(s, 2);
  return {std::move(s), std::move(u)};
}

SkewMonoidal chain3_skew() {
  std::vector<ObjId> t;
  for (ObjId x = 0; x < 3; ++x) {
    for (ObjId y = 0; y < 3; ++y) t.push_back(y == 0 ? 0 : std::max(x, 1));
  }
  TensorStructure s = thin_structure(chain(3), std::move(t));
  UnitCandidate u = thin_unit(s, 1);
  return {std::move(s), std::move(u)};
}

std::shared_ptr<const SkewMonoidal> share(SkewMonoidal s) {
  return std::make_shared<const SkewMonoidal>(std::move(s));
}

MonoidalFunctorData identity_functor(const std::shared_ptr<const SkewMonoidal>& s) {
  const TensorStructure& t = s->tensor;
  const FinCategory& c = t.base();
  const int n = c.object_count();
  std::vector<MorId> phi;
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) phi.push_back(c.identity(t.tensor(x, y)));
  }
  return MonoidalFunctorData::make(s, s, FinFunctor::identity(t.base_ptr()), std::move(phi),
                                   c.identity(s->unit.unit));
}

MonoidalFunctorData terminal_to_codisc2(ObjId to, ObjId unit) {
  TensorStructure c2 = codisc2();
  UnitCandidate u = thin_unit(c2, unit);
  return thin_functor(share(terminal()), share({std::move(c2), std::move(u)}), {to});
}

MonoidalFunctorData terminal_to_disc2_join() {
  return thin_functor(share(terminal()), share(disc2_join()), {1});
}

MonoidalFunctorData bz2_twist() {
  auto s = share({bz2(), bz2_unit(false)});
  return MonoidalFunctorData::make(s, s, FinFunctor::identity(s->tensor.base_ptr()), {bz2_s()},
                                   bz2_s());
}

MonoidalFunctorData monoid_in_bz2(MorId phi) {
  auto src = share(terminal());
  auto dst = share({bz2(), bz2_unit(false)});
  FinFunctor F = FinFunctor::make(src->tensor.base_ptr(), dst->tensor.base_ptr(), {0}, {0});
  return MonoidalFunctorData::make(src, dst, std::move(F), {phi}, kNoMorphism);
}

MonoidalFunctorData chain_plus_to_max() {
  return thin_functor(share(chain3_plus()), share(chain3_max()), {0, 1, 2});
}

MonoidalFunctorData chain_shift() {
  auto s = share(chain3_max());
  return thin_functor(s, s, {1, 2, 2});
}

std::vector<NamedStructure> corpus() {
  std::vector<NamedStructure> out;
  out.push_back({"terminal", terminal().tensor});
  out.push_back({"codisc2", codisc2()});
  out.push_back({"bz2", bz2()});
  out.push_back({"discrete2-projection", discrete2_projection()});
  out.push_back({"disc2-join", disc2_join().tensor});
  out.push_back({"chain3-max", chain3_max().tensor});
  out.push_back({"chain3-plus", chain3_plus().tensor});
  out.push_back({"chain3-second-projection", chain3_second_projection().tensor});
  out.push_back({"chain3-skew", chain3_skew().tensor});
  out.push_back({"codisc3-constant", thin_structure(codiscrete(3), std::vector<ObjId>(9, 0))});
  return out;
}

}  // namespace skewcheck::fixtures
