#include <map>

#include "doctest.h"
#include "skewcheck/setmodels.hpp"

using namespace skewcheck;

namespace {

// Oracle: each diagram traced by hand on explicit tuples of a magma model
// with singleton test sets, so only the M coordinates vary.
std::string oracle_signature(int k, const std::vector<int>& t, int one) {
  const auto op = [&](int a, int b) { return t[static_cast<std::size_t>(a * k + b)]; };
  bool pentagon = true;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        // (a, b, c, w, x, y, z): the long side reaches (a·b)·c on the outer
        // coordinate, the short side a·(b·c).
        pentagon = pentagon && op(op(a, b), c) == op(a, op(b, c));
      }
    }
  }
  bool mid = true;
  bool right = true;
  for (int m = 0; m < k; ++m) {
    // mid: (m, x, y) -> ((m, x, 1·), y) -> (m·1, x, m, i, y) -> (m·1, x, y).
    mid = mid && op(m, one) == m;
    // right: (m, x, y) -> (1, (m, x, y), i) -> (1·m, x, 1, y, i) vs (m, x, (1, y, i)).
    right = right && op(one, m) == m;
  }
  std::string s;
  for (bool b : {pentagon, true, mid, right, true}) s += b ? 'T' : 'F';
  return s;
}

std::map<std::string, std::uint64_t> oracle_census(int max_size) {
  std::map<std::string, std::uint64_t> counts;
  for (int k = 2; k <= max_size; ++k) {
    std::vector<int> t(static_cast<std::size_t>(k * k), 0);
    while (true) {
      for (int one = 0; one < k; ++one) ++counts[oracle_signature(k, t, one)];
      std::size_t i = t.size();
      while (i > 0 && ++t[i - 1] == k) t[--i] = 0;
      if (i == 0) break;
    }
  }
  return counts;
}

std::map<std::string, std::uint64_t> as_map(const Census& c) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& e : c.entries) out[e.signature.to_string()] = e.count;
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

TEST_SUITE("setmodels") {

TEST_CASE("magma validation") {
  CHECK_THROWS_AS(Magma::make(2, {0, 1, 1}, 0), ValidationError);
  CHECK_THROWS_AS(Magma::make(2, {0, 1, 1, 2}, 0), ValidationError);
  CHECK_THROWS_AS(Magma::make(2, {0, 1, 1, 0}, 2), ValidationError);
  const Magma m = Magma::make(2, {0, 1, 1, 0}, 0);
  CHECK(m.associative());
  CHECK(m.left_identity(0));
  CHECK(m.right_identity(0));
  CHECK(element_name(m, 0) == "1");
  CHECK(element_name(m, 1) == "a");
  CHECK(element_name(Magma::make(2, {0, 0, 0, 0}, 1), 0) == "a");
}

TEST_CASE("builtin tables") {
  CHECK(builtin_models().size() == 4);
  const Magma& left = builtin("paper-left").magma;
  CHECK(left.op(1, 2) == 2);  // a·b = b
  CHECK(left.op(2, 2) == 0);  // b·b = 1
  const Magma& right = builtin("paper-right").magma;
  CHECK(right.op(0, 1) == 0);  // 1·a = 1
  const Magma& mid = builtin("paper-mid").magma;
  CHECK(mid.op(1, 0) == 0);  // a·1 = 1
  CHECK(builtin("paper-unitunit").unit_size() == 2);
}

TEST_CASE("signatures of the builtin models") {
  CHECK(evaluate_model(builtin("paper-left")).signature.to_string() == "FTTTT");
  CHECK(evaluate_model(builtin("paper-mid")).signature.to_string() == "TTFTT");
  CHECK(evaluate_model(builtin("paper-right")).signature.to_string() == "TTTFT");
  CHECK(evaluate_model(builtin("paper-unitunit")).signature.to_string() == "TTTTF");
}

TEST_CASE("witnesses") {
  // (a·b)·a = a but a·(b·a) = 1.
  CHECK(evaluate_model(builtin("paper-left")).witnesses[0] == std::vector<int>{1, 2, 1, 0, 0, 0, 0});
  // a·1 = 1 ≠ a.
  CHECK(evaluate_model(builtin("paper-mid")).witnesses[2] == std::vector<int>{1, 0, 0});
  // 1·a = 1 ≠ a.
  CHECK(evaluate_model(builtin("paper-right")).witnesses[3] == std::vector<int>{1, 0, 0});
  // b goes to a.
  CHECK(evaluate_model(builtin("paper-unitunit")).witnesses[4] == std::vector<int>{1});
}

TEST_CASE("larger test sets do not change the signatures") {
  for (const auto& nm : builtin_models()) {
    CAPTURE(nm.name);
    PointwiseModel m = nm.model;
    const auto base = evaluate_model(m).signature;
    m.test_sizes = {1, 2, 3};
    CHECK(evaluate_model(m).signature == base);
  }
}

TEST_CASE("dual signatures") {
  const auto s = AxiomSignature::parse("TTTFT");
  CHECK(dual_signature(s).to_string() == "TFTTT");
  CHECK(dual_signature(AxiomSignature::all_true()) == AxiomSignature::all_true());
  for (int code = 0; code < 32; ++code) {
    AxiomSignature x;
    for (std::size_t i = 0; i < 5; ++i) x.holds[i] = ((code >> i) & 1) != 0;
    CHECK(dual_signature(dual_signature(x)) == x);
  }
  CHECK_THROWS_AS(AxiomSignature::parse("TTTT"), Error);
  CHECK_THROWS_AS(AxiomSignature::parse("TTXTT"), Error);
}

TEST_CASE("census at size 2 against the oracle and the frozen counts") {
  const Census c = census(2);
  CHECK(c.total == 32);
  const std::map<std::string, std::uint64_t> frozen = {
      {"FTFFT", 12}, {"FTFTT", 2}, {"FTTFT", 2}, {"TTFFT", 8},
      {"TTFTT", 2},  {"TTTFT", 2}, {"TTTTT", 4}};
  CHECK(as_map(c) == frozen);
  CHECK(oracle_census(2) == frozen);
}

TEST_CASE("census at size 3") {
  const Census c = census(3);
  CHECK(c.total == census_size(3));
  CHECK(c.total == 59081);
  CHECK(as_map(c) == oracle_census(3));
  const auto it = std::find_if(c.entries.begin(), c.entries.end(),
                               [](const CensusEntry& e) { return e.signature.to_string() == "FTTTT"; });
  REQUIRE(it != c.entries.end());
  CHECK(it->count == 210);
  CHECK(evaluate_model(PointwiseModel::magma_model(it->witness)).signature.to_string() == "FTTTT");
  for (const auto& e : c.entries) {
    CHECK(e.signature[Axiom::LeftUnit]);
    CHECK(e.signature[Axiom::UnitUnit]);
  }
  // The left table is counted in that class.
  CHECK(evaluate_model(builtin("paper-left")).signature == it->signature);
}

TEST_CASE("census kernels agree") {
  const Census a = census(3);
  const Census b = serial::census(3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].signature == b.entries[i].signature);
    CHECK(a.entries[i].count == b.entries[i].count);
    CHECK(a.entries[i].witness == b.entries[i].witness);
  }
}

TEST_CASE("census budget") {
  CHECK(census_size(4) > kDefaultBudget);
  CHECK_THROWS_AS(census(4), SearchBudgetExceeded);
  CHECK_THROWS_AS(census(2, 31), SearchBudgetExceeded);
  CHECK(census(1).total == 0);
}

TEST_CASE("independence certificates") {
  // For each axiom some model in the census at size 3, or its dual, fails
  // exactly that axiom; the cartesian model covers the last one.
  const Census c = census(3);
  std::vector<AxiomSignature> found;
  for (const auto& e : c.entries) {
    found.push_back(e.signature);
    found.push_back(dual_signature(e.signature));
  }
  found.push_back(evaluate_model(builtin("paper-unitunit")).signature);
  for (Axiom a : kAxioms) {
    AxiomSignature want = AxiomSignature::all_true();
    want[a] = false;
    CHECK(std::find(found.begin(), found.end(), want) != found.end());
  }
}

TEST_CASE("reduction to table conditions") {
  for (int k = 2; k <= 2; ++k) {
    for (int code = 0; code < 16; ++code) {
      for (int one = 0; one < 2; ++one) {
        std::vector<int> t(4);
        for (std::size_t i = 0; i < 4; ++i) t[i] = (code >> (3 - i)) & 1;
        const Magma m = Magma::make(k, t, one);
        CHECK(evaluate_model(PointwiseModel::magma_model(m)).signature == table_signature(m));
      }
    }
  }
}

TEST_CASE("finite fragments") {
  const FiniteModel m = to_finite_structure(builtin("paper-left"));
  CHECK(m.structure.tensor.base().object_count() == 9);
  CHECK_FALSE(m.structure.tensor.total());
  CHECK(m.object_names.front() == "I");
  CHECK(m.structure.unit.unit == 0);
  CHECK_THROWS_AS(to_finite_structure(PointwiseModel::cartesian_unitunit({1}), 3), ValidationError);
  const FiniteModel shallow = to_finite_structure(PointwiseModel::cartesian_unitunit({1}), 2);
  CHECK(shallow.structure.tensor.base().object_count() <= kMaxObjects);
}

}  // TEST_SUITE
