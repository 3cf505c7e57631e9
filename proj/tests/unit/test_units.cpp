#include "doctest.h"
#include "skewcheck/fixtures.hpp"
#include "skewcheck/setmodels.hpp"

using namespace skewcheck;
namespace fx = skewcheck::fixtures;

namespace {

// The lawful two-element magma model with a·a = 1: I⊗I = M×I×I has two
// points, so λ_I is not invertible.
FiniteModel z2_magma_fragment() {
  return to_finite_structure(PointwiseModel::magma_model(Magma::make(2, {0, 1, 1, 0}, 0)));
}

}  // namespace

TEST_SUITE("units") {

TEST_CASE("unit morphisms") {
  const SkewMonoidal t = fx::terminal();
  CHECK(is_unit_morphism(t.tensor, t.unit, t.unit, 0));
  CHECK(canonical_morphism(t.tensor, t.unit, t.unit) == 0);

  const TensorStructure c = fx::codisc2();
  const UnitCandidate u0 = fx::thin_unit(c, 0);
  const UnitCandidate u1 = fx::thin_unit(c, 1);
  const MorId f = c.base().hom(0, 1)[0];
  CHECK(is_unit_morphism(c, u0, u1, f));
  CHECK(canonical_morphism(c, u0, u1) == f);
  CHECK_THROWS_AS(is_unit_morphism(c, u0, u1, c.base().identity(0)), Error);

  const TensorStructure z = fx::bz2();
  const UnitCandidate plain = fx::bz2_unit(false);
  CHECK_FALSE(is_unit_morphism(z, plain, plain, fx::bz2_s()));
  CHECK(canonical_morphism(z, plain, plain) == 0);
  CHECK(canonical_morphism(z, plain, fx::bz2_unit(true)) == fx::bz2_s());
}

TEST_CASE("enumeration on small fixtures") {
  CHECK(enumerate_units(fx::terminal().tensor).size() == 1);
  const auto c = enumerate_units(fx::codisc2());
  REQUIRE(c.size() == 2);
  CHECK(c[0].unit == 0);
  CHECK(c[1].unit == 1);
  CHECK(enumerate_units(fx::discrete2_projection()).empty());
  const auto z = enumerate_units(fx::bz2());
  REQUIRE(z.size() == 2);
  CHECK(z[0] == fx::bz2_unit(false));
  CHECK(z[1] == fx::bz2_unit(true));
}

TEST_CASE("parallel and serial enumeration agree on the corpus") {
  for (const auto& [name, s] : fx::corpus()) {
    CAPTURE(name);
    for (AxiomMask mask : {AxiomMask::all(), AxiomMask::unit_axioms()}) {
      CHECK(enumerate_units(s, {mask, kDefaultBudget}) == serial::enumerate_units(s, {mask, kDefaultBudget}));
    }
  }
}

TEST_CASE("enumeration needs a total tensor and respects the budget") {
  const FiniteModel m = z2_magma_fragment();
  CHECK_THROWS_AS(enumerate_units(m.structure.tensor), Error);
  CHECK_THROWS_AS(enumerate_units(fx::codisc2(), {AxiomMask::all(), 3}), SearchBudgetExceeded);
}

TEST_CASE("units category") {
  const UnitsCategory t = build_units_category(fx::terminal().tensor);
  REQUIRE(t.units.size() == 1);
  CHECK(t.hom(0, 0) == std::vector<MorId>{0});

  const TensorStructure c = fx::codisc2();
  const UnitsCategory full = build_units_category(c);
  REQUIRE(full.units.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(full.hom(i, j).size() == 1);
  }
  CHECK(c.base().compose(full.hom(1, 0)[0], full.hom(0, 1)[0]) == c.base().identity(0));
  const UnitsCategory free = build_units_category(c, {AxiomMask::unit_axioms(), kDefaultBudget});
  CHECK(free.units == full.units);
  CHECK(free.morphisms == full.morphisms);
}

TEST_CASE("determination") {
  const auto t = determination_check(fx::terminal().tensor);
  CHECK(t.units == 1);
  CHECK(t.lambda_groups == 1);
  const auto c = determination_check(fx::codisc2());
  CHECK(c.units == 2);
  CHECK(c.lambda_groups == 2);
  CHECK(c.rho_groups == 2);
  // Both BZ2 units sit on the one object; λ tells them apart.
  const auto z = determination_check(fx::bz2());
  CHECK(z.units == 2);
  CHECK(z.lambda_groups == 2);
  CHECK(z.rho_groups == 2);
}

TEST_CASE("transport") {
  const SkewMonoidal t = fx::terminal();
  CHECK(transport_unit(t.tensor, t.unit, 0, 0) == t.unit);

  const TensorStructure c = fx::codisc2();
  const auto units = enumerate_units(c);
  const MorId f = c.base().hom(1, 0)[0];
  const MorId g = c.base().hom(0, 1)[0];
  CHECK(transport_unit(c, units[0], f, g) == units[1]);

  const TensorStructure z = fx::bz2();
  const UnitCandidate twisted = transport_unit(z, fx::bz2_unit(false), fx::bz2_s(), fx::bz2_s());
  CHECK(twisted == fx::bz2_unit(true));
  CHECK(check_all(z, twisted).all_pass());

  CHECK_THROWS_AS(transport_unit(c, units[0], c.base().identity(0), g), Error);
}

TEST_CASE("tensor square of a unit") {
  const SkewMonoidal t = fx::terminal();
  const TensorSquare ts = tensor_square_candidate(t.tensor, t.unit);
  CHECK(ts.is_unit);
  CHECK(ts.lambda_invertible);

  const TensorSquare cs = tensor_square_candidate(fx::codisc2(), fx::thin_unit(fx::codisc2(), 1));
  CHECK(cs.is_unit);
  CHECK(cs.lambda_invertible);

  const FiniteModel m = z2_magma_fragment();
  REQUIRE(check_all(m.structure.tensor, m.structure.unit).all_pass());
  const TensorSquare ms = tensor_square_candidate(m.structure.tensor, m.structure.unit);
  CHECK_FALSE(ms.is_unit);
  CHECK_FALSE(ms.lambda_invertible);
  CHECK_FALSE(normality_class(m.structure.tensor, m.structure.unit).weakly_normal);
}

TEST_CASE("End(I)") {
  const SkewMonoidal t = fx::terminal();
  const auto te = end_monoid_commutative(t.tensor, t.unit);
  CHECK(te.monoid.size() == 1);
  CHECK(te.commutative);

  const auto ze = end_monoid_commutative(fx::bz2(), fx::bz2_unit(false));
  CHECK(ze.monoid.size() == 2);
  CHECK(ze.commutative);
  CHECK(ze.weakly_normal);
  CHECK(ze.monoid.table == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("invertible units lemma") {
  const SkewMonoidal t = fx::terminal();
  CHECK(invertible_units_lemma_check(t.tensor, t.unit));
  CHECK(invertible_units_lemma_check(fx::codisc2(), fx::thin_unit(fx::codisc2(), 0)));
  CHECK(invertible_units_lemma_check(fx::bz2(), fx::bz2_unit(false)));
  // λ_0 is not invertible in the chain with X⊗Y = Y.
  const SkewMonoidal p = fx::chain3_second_projection();
  CHECK_THROWS_AS(invertible_units_lemma_check(p.tensor, p.unit), Error);
}

TEST_CASE("λ_I∘ρ_I is a unit morphism") {
  for (const auto& [name, s] : fx::corpus()) {
    CAPTURE(name);
    for (const auto& u : enumerate_units(s, {AxiomMask::unit_axioms().without(Axiom::UnitUnit), kDefaultBudget})) {
      CHECK(unit_unit_is_unit_morphism(s, u));
    }
  }
}

}  // TEST_SUITE
