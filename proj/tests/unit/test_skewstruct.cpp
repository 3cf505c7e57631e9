#include "doctest.h"
#include "skewcheck/fixtures.hpp"
#include "skewcheck/setmodels.hpp"

using namespace skewcheck;
namespace fx = skewcheck::fixtures;

namespace {

std::string statuses(const AxiomReport& r) {
  std::string out;
  for (Axiom a : kAxioms) out += r[a].status == Status::Pass ? 'P' : r[a].status == Status::Fail ? 'F' : '-';
  return out;
}

const PointwiseModel& builtin(const std::string& name) {
  static const auto models = builtin_models();
  for (const auto& m : models) {
    if (m.name == name) return m.model;
  }
  FAIL("no builtin " << name);
  return models.front().model;
}

}  // namespace

TEST_SUITE("skewstruct") {

TEST_CASE("axiom masks") {
  CHECK(AxiomMask::parse("pentagon,left,mid,right,unitunit") == AxiomMask::all());
  CHECK(AxiomMask::parse("left,mid,right,unitunit") == AxiomMask::unit_axioms());
  CHECK(AxiomMask::parse("") == AxiomMask::none());
  CHECK(AxiomMask::all().without(Axiom::Pentagon) == AxiomMask::unit_axioms());
  CHECK(AxiomMask::parse(AxiomMask::unit_axioms().to_string()) == AxiomMask::unit_axioms());
  CHECK_THROWS_AS(AxiomMask::parse("pentagon,hexagon"), Error);
}

TEST_CASE("tensor validation") {
  const auto c = fx::chain(2);
  // X⊗Y = 1 - X is contravariant, so the forced f⊗g do not exist.
  CHECK_THROWS_AS(fx::thin_structure(c, {1, 1, 0, 0}), Error);

  // On BZ2, s⊗s = 1 while s⊗1 = 1 and 1⊗s = s breaks the interchange law.
  CHECK_THROWS_AS(TensorStructure::make(fx::bz2().base_ptr(), {0}, {0, 1, 0, 0}, {0}), ValidationError);

  // α = s is natural because Z/2 is commutative.
  CHECK_NOTHROW(TensorStructure::make(fx::bz2().base_ptr(), {0}, {0, 1, 1, 0}, {1}));

  // Wrong table lengths.
  CHECK_THROWS_AS(TensorStructure::make(c, {0, 1, 1}, {}, {}), ValidationError);
}

TEST_CASE("terminal structure passes everything") {
  const SkewMonoidal t = fx::terminal();
  const AxiomReport r = check_all(t.tensor, t.unit);
  CHECK(statuses(r) == "PPPPP");
  CHECK(r.passed() == 5);
  const Normality n = normality_class(t.tensor, t.unit);
  CHECK(n == Normality{true, true, true, true});
}

TEST_CASE("codiscrete and BZ2 structures") {
  const TensorStructure c = fx::codisc2();
  for (ObjId i : {0, 1}) {
    const UnitCandidate u = fx::thin_unit(c, i);
    CHECK(statuses(check_all(c, u)) == "PPPPP");
    CHECK(normality_class(c, u) == Normality{true, true, true, true});
  }
  CHECK(c.degenerate());
  const TensorStructure z = fx::bz2();
  CHECK(statuses(check_all(z, fx::bz2_unit(false))) == "PPPPP");
  CHECK(statuses(check_all(z, fx::bz2_unit(true))) == "PPPPP");
  CHECK(normality_class(z, fx::bz2_unit(false)).normal);
}

TEST_CASE("BZ2 with a mismatched unit pair fails the mid axiom") {
  const TensorStructure z = fx::bz2();
  const UnitCandidate u = UnitCandidate::make(z, 0, {0}, {1});
  const AxiomReport r = check_all(z, u);
  CHECK(r[Axiom::MidUnit].status == Status::Fail);
  CHECK(r[Axiom::UnitUnit].status == Status::Fail);
  CHECK(r[Axiom::LeftUnit].ok());
  CHECK_THROWS_AS(normality_class(z, u), Error);
}

TEST_CASE("masks skip axioms") {
  const SkewMonoidal t = fx::terminal();
  const AxiomReport r = check_all(t.tensor, t.unit, AxiomMask::unit_axioms());
  CHECK(statuses(r) == "-PPPP");
  CHECK(r.enabled() == 4);
}

TEST_CASE("pentagon kernels agree") {
  for (const auto& [name, s] : fx::corpus()) {
    CAPTURE(name);
    CHECK(check_pentagon(s) == serial::check_pentagon(s));
  }
  const FiniteModel left = to_finite_structure(builtin("paper-left"));
  CHECK(check_pentagon(left.structure.tensor) == serial::check_pentagon(left.structure.tensor));
}

TEST_CASE("set-model fragments through the finite checker") {
  SUBCASE("left table fails only the pentagon") {
    const FiniteModel m = to_finite_structure(builtin("paper-left"));
    const AxiomReport r = check_all(m.structure.tensor, m.structure.unit);
    CHECK(statuses(r) == "FPPPP");
    const auto& w = r[Axiom::Pentagon].witness;
    REQUIRE(w.size() == 4);
    // Every object is the one-point unit set, so the witness names I four times.
    for (ObjId x : w) CHECK(m.object_names[static_cast<std::size_t>(x)] == "I");
    CHECK(statuses(check_all(m.structure.tensor, m.structure.unit, AxiomMask::unit_axioms())) == "-PPPP");
  }
  SUBCASE("middle table fails only mid") {
    const FiniteModel m = to_finite_structure(builtin("paper-mid"));
    CHECK(statuses(check_all(m.structure.tensor, m.structure.unit)) == "PPFPP");
  }
  SUBCASE("right table fails only right") {
    const FiniteModel m = to_finite_structure(builtin("paper-right"));
    CHECK(statuses(check_all(m.structure.tensor, m.structure.unit)) == "PPPFP");
  }
  SUBCASE("cartesian model fails only unit-unit") {
    const FiniteModel m = to_finite_structure(PointwiseModel::cartesian_unitunit({2}));
    CHECK(statuses(check_all(m.structure.tensor, m.structure.unit)) == "PPPPF");
  }
}

TEST_CASE("reversal") {
  SUBCASE("terminal is self-dual") {
    const SkewMonoidal t = fx::terminal();
    const auto [rt, ru] = reverse_structure(t.tensor, t.unit);
    CHECK(rt == t.tensor);
    CHECK(ru == t.unit);
  }
  SUBCASE("codiscrete stays lawful") {
    const TensorStructure c = fx::codisc2();
    const auto [rt, ru] = reverse_structure(c, fx::thin_unit(c, 0));
    CHECK(statuses(check_all(rt, ru)) == "PPPPP");
  }
  SUBCASE("left and right failures swap") {
    const FiniteModel m = to_finite_structure(builtin("paper-right"));
    const auto [rt, ru] = reverse_structure(m.structure.tensor, m.structure.unit);
    CHECK(statuses(check_all(rt, ru)) == "PFPPP");
  }
  SUBCASE("chain fixtures") {
    for (const SkewMonoidal& s : {fx::chain3_second_projection(), fx::chain3_skew(), fx::chain3_plus()}) {
      const auto [rt, ru] = reverse_structure(s.tensor, s.unit);
      const AxiomReport a = check_all(s.tensor, s.unit);
      const AxiomReport b = check_all(rt, ru);
      CHECK(a[Axiom::LeftUnit].ok() == b[Axiom::RightUnit].ok());
      CHECK(a[Axiom::RightUnit].ok() == b[Axiom::LeftUnit].ok());
      CHECK(a[Axiom::Pentagon].ok() == b[Axiom::Pentagon].ok());
      CHECK(a[Axiom::MidUnit].ok() == b[Axiom::MidUnit].ok());
      CHECK(a[Axiom::UnitUnit].ok() == b[Axiom::UnitUnit].ok());
    }
  }
}

TEST_CASE("normality of the skew chain fixtures") {
  const SkewMonoidal p = fx::chain3_second_projection();
  CHECK(normality_class(p.tensor, p.unit) == Normality{true, true, false, false});
  const SkewMonoidal k = fx::chain3_skew();
  CHECK(normality_class(k.tensor, k.unit) == Normality{true, false, false, false});
}

}  // TEST_SUITE
