#include "skewcheck/units.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>

namespace skewcheck {

namespace {

std::string ids(const std::vector<MorId>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string describe(const UnitCandidate& u) {
  return "(I=" + std::to_string(u.unit) + ", λ=" + ids(u.lambda.components()) +
         ", ρ=" + ids(u.rho.components()) + ")";
}

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorKind::PropositionViolated, what);
}

void require_unit(const TensorStructure& s, const UnitCandidate& u) {
  const AxiomReport r = check_all(s, u, AxiomMask::unit_axioms());
  if (!r.all_pass()) throw Error(ErrorKind::NotAUnit, describe(u) + " fails a unit axiom");
}

void require_total(const TensorStructure& s) {
  if (!s.total()) {
    throw Error(ErrorKind::PreconditionUnmet, "unit enumeration needs a total tensor");
  }
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  // Returns false once the budget is spent; the caller unwinds.
  bool spend() {
    const std::uint64_t used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > limit_) {
      exceeded_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
  void throw_if_exceeded() const {
    if (exceeded()) throw SearchBudgetExceeded(used_.load(), limit_);
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exceeded_{false};
};

// Backtracking over λ (or ρ) components for one unit object, object by
// object. After each assignment only the constraints whose every component
// is already assigned and which mention the new object are rechecked.
class ComponentSearch {
 public:
  enum class Side { Lambda, Rho };

  ComponentSearch(const TensorStructure& s, ObjId unit, Side side, bool with_axiom, Budget& budget)
      : s_(s), c_(s.base()), unit_(unit), side_(side), with_axiom_(with_axiom), budget_(budget),
        comp_(static_cast<std::size_t>(c_.object_count()), kNoMorphism) {}

  std::vector<std::vector<MorId>> run() {
    step(0);
    return std::move(found_);
  }

 private:
  MorId at(ObjId x) const { return comp_[static_cast<std::size_t>(x)]; }

  std::pair<ObjId, ObjId> shape(ObjId x) const {
    return side_ == Side::Lambda ? std::pair{s_.tensor(unit_, x), x}
                                 : std::pair{x, s_.tensor(x, unit_)};
  }

  bool consistent(ObjId last) const {
    const int n = c_.object_count();
    // Naturality squares for f: a -> b with a, b <= last, one of them last.
    for (ObjId other = 0; other <= last; ++other) {
      for (int dir = 0; dir < 2; ++dir) {
        const ObjId a = dir == 0 ? other : last;
        const ObjId b = dir == 0 ? last : other;
        if (dir == 1 && other == last) continue;
        for (MorId f : c_.hom(a, b)) {
          bool ok;
          if (side_ == Side::Lambda) {
            ok = c_.compose(at(b), s_.tensor_mor(c_.identity(unit_), f)) == c_.compose(f, at(a));
          } else {
            ok = c_.compose(at(b), f) == c_.compose(s_.tensor_mor(f, c_.identity(unit_)), at(a));
          }
          if (!ok) return false;
        }
      }
    }
    if (!with_axiom_) return true;
    // Left axiom uses λ_x and λ_{x⊗y}; right axiom uses ρ_y and ρ_{x⊗y}.
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) {
        const ObjId xy = s_.tensor(x, y);
        const ObjId single = side_ == Side::Lambda ? x : y;
        if (single > last || xy > last || (single != last && xy != last)) continue;
        bool ok;
        if (side_ == Side::Lambda) {
          ok = c_.compose(at(xy), s_.assoc(unit_, x, y)) ==
               s_.tensor_mor(at(x), c_.identity(y));
        } else {
          ok = c_.compose(s_.assoc(x, y, unit_), at(xy)) ==
               s_.tensor_mor(c_.identity(x), at(y));
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  void step(ObjId x) {
    if (budget_.exceeded()) return;
    if (x == c_.object_count()) {
      found_.push_back(comp_);
      return;
    }
    const auto [a, b] = shape(x);
    for (MorId f : c_.hom(a, b)) {
      if (!budget_.spend()) return;
      comp_[static_cast<std::size_t>(x)] = f;
      if (consistent(x)) step(x + 1);
    }
    comp_[static_cast<std::size_t>(x)] = kNoMorphism;
  }

  const TensorStructure& s_;
  const FinCategory& c_;
  ObjId unit_;
  Side side_;
  bool with_axiom_;
  Budget& budget_;
  std::vector<MorId> comp_;
  std::vector<std::vector<MorId>> found_;
};

std::vector<UnitCandidate> units_at(const TensorStructure& s, ObjId unit, AxiomMask mask,
                                    Budget& budget) {
  using Side = ComponentSearch::Side;
  auto lambdas =
      ComponentSearch(s, unit, Side::Lambda, mask.has(Axiom::LeftUnit), budget).run();
  auto rhos = ComponentSearch(s, unit, Side::Rho, mask.has(Axiom::RightUnit), budget).run();
  std::vector<UnitCandidate> out;
  for (const auto& l : lambdas) {
    for (const auto& r : rhos) {
      if (!budget.spend()) return out;
      UnitCandidate u = UnitCandidate::make_unchecked(s, unit, l, r);
      if (mask.has(Axiom::MidUnit) && !check_mid_unit(s, u).ok()) continue;
      if (mask.has(Axiom::UnitUnit) && !check_unit_unit(s, u).ok()) continue;
      out.push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace

bool is_unit_morphism(const TensorStructure& s, const UnitCandidate& u, const UnitCandidate& v,
                      MorId f) {
  const FinCategory& c = s.base();
  if (f < 0 || f >= c.morphism_count() || c.src(f) != u.unit || c.dst(f) != v.unit) {
    throw Error(ErrorKind::ShapeMismatch, "unit morphism must go from object " +
                                              std::to_string(u.unit) + " to " +
                                              std::to_string(v.unit));
  }
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const MorId l = c.compose({v.lambda.at(x), s.tensor_mor(f, c.identity(x))});
    if (l != kNoMorphism && u.lambda.at(x) != kNoMorphism && l != u.lambda.at(x)) return false;
    const MorId r = c.compose({s.tensor_mor(c.identity(x), f), u.rho.at(x)});
    if (r != kNoMorphism && v.rho.at(x) != kNoMorphism && r != v.rho.at(x)) return false;
  }
  return true;
}

MorId canonical_morphism(const TensorStructure& s, const UnitCandidate& u,
                         const UnitCandidate& v) {
  const MorId phi = s.base().compose({u.lambda.at(v.unit), v.rho.at(u.unit)});
  if (phi == kNoMorphism) {
    throw Error(ErrorKind::PreconditionUnmet,
                "I⊗J is outside the tensor's domain for " + describe(u) + " -> " + describe(v));
  }
  if (!is_unit_morphism(s, u, v, phi)) {
    violated("canonical morphism #" + std::to_string(phi) + " from " + describe(u) + " to " +
             describe(v) + " is not a unit morphism");
  }
  return phi;
}

std::vector<UnitCandidate> enumerate_units(const TensorStructure& s, const SearchOptions& opts) {
  require_total(s);
  if (opts.mask.has(Axiom::Pentagon) && !check_pentagon(s).ok()) return {};
  const int n = s.base().object_count();
  Budget budget(opts.budget);
  std::vector<std::vector<UnitCandidate>> per_object(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int unit = 0; unit < n; ++unit) {
    per_object[static_cast<std::size_t>(unit)] = units_at(s, unit, opts.mask, budget);
  }
  budget.throw_if_exceeded();
  std::vector<UnitCandidate> out;
  for (auto& v : per_object) {
    for (auto& u : v) out.push_back(std::move(u));
  }
  return out;
}

std::vector<UnitCandidate> serial::enumerate_units(const TensorStructure& s,
                                                   const SearchOptions& opts) {
  require_total(s);
  if (opts.mask.has(Axiom::Pentagon) && !serial::check_pentagon(s).ok()) return {};
  const FinCategory& c = s.base();
  const int n = c.object_count();
  const AxiomMask unit_mask = opts.mask.without(Axiom::Pentagon);
  std::uint64_t spent = 0;
  std::vector<UnitCandidate> out;

  // Every array with comp[x] in choices[x], in lexicographic order.
  const auto product = [&](const std::vector<std::span<const MorId>>& choices) {
    std::vector<std::vector<MorId>> arrays;
    for (const auto& ch : choices) {
      if (ch.empty()) return arrays;
    }
    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
      std::vector<MorId> a(choices.size());
      for (std::size_t i = 0; i < choices.size(); ++i) a[i] = choices[i][pos[i]];
      arrays.push_back(std::move(a));
      if (++spent > opts.budget) throw SearchBudgetExceeded(spent, opts.budget);
      std::size_t i = choices.size();
      while (i > 0 && ++pos[i - 1] == choices[i - 1].size()) pos[--i] = 0;
      if (i == 0) return arrays;
    }
  };

  for (ObjId unit = 0; unit < n; ++unit) {
    std::vector<std::span<const MorId>> lchoices;
    std::vector<std::span<const MorId>> rchoices;
    for (ObjId x = 0; x < n; ++x) {
      lchoices.push_back(c.hom(s.tensor(unit, x), x));
      rchoices.push_back(c.hom(x, s.tensor(x, unit)));
    }
    const auto lambdas = product(lchoices);
    const auto rhos = product(rchoices);
    for (const auto& l : lambdas) {
      for (const auto& r : rhos) {
        if (++spent > opts.budget) throw SearchBudgetExceeded(spent, opts.budget);
        UnitCandidate u = UnitCandidate::make_unchecked(s, unit, l, r);
        if (!lambda_natural(s, u) || !rho_natural(s, u)) continue;
        if (!check_all(s, u, unit_mask).all_pass()) continue;
        out.push_back(std::move(u));
      }
    }
  }
  return out;
}

UnitsCategory units_category_of(const TensorStructure& s, std::vector<UnitCandidate> units) {
  const FinCategory& c = s.base();
  UnitsCategory out;
  out.units = std::move(units);
  const std::size_t k = out.units.size();
  out.morphisms.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const UnitCandidate& u = out.units[i];
    for (std::size_t j = 0; j < k; ++j) {
      const UnitCandidate& v = out.units[j];
      auto& set = out.morphisms[i * k + j];
      for (MorId f : c.hom(u.unit, v.unit)) {
        if (is_unit_morphism(s, u, v, f)) set.push_back(f);
      }
      const MorId phi = canonical_morphism(s, u, v);
      if (set.size() != 1 || set.front() != phi) {
        violated("unit morphisms " + describe(u) + " -> " + describe(v) + " are " + ids(set) +
                 ", expected exactly [" + std::to_string(phi) + "]");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const MorId there = out.hom(i, j).front();
      const MorId back = out.hom(j, i).front();
      if (c.compose(back, there) != c.identity(out.units[i].unit)) {
        violated("φ_{J,I}∘φ_{I,J} is not the identity for " + describe(out.units[i]) + " and " +
                 describe(out.units[j]));
      }
    }
  }
  return out;
}

UnitsCategory build_units_category(const TensorStructure& s, SearchOptions opts) {
  return units_category_of(s, enumerate_units(s, opts));
}

DeterminationReport determination_check(const std::vector<UnitCandidate>& units) {
  std::map<std::pair<ObjId, std::vector<MorId>>, std::set<std::vector<MorId>>> by_lambda;
  std::map<std::pair<ObjId, std::vector<MorId>>, std::set<std::vector<MorId>>> by_rho;
  for (const auto& u : units) {
    by_lambda[{u.unit, u.lambda.components()}].insert(u.rho.components());
    by_rho[{u.unit, u.rho.components()}].insert(u.lambda.components());
  }
  for (const auto& [key, rhos] : by_lambda) {
    if (rhos.size() != 1) {
      violated("(I=" + std::to_string(key.first) + ", λ=" + ids(key.second) + ") has " +
               std::to_string(rhos.size()) + " compatible ρ");
    }
  }
  for (const auto& [key, lambdas] : by_rho) {
    if (lambdas.size() != 1) {
      violated("(I=" + std::to_string(key.first) + ", ρ=" + ids(key.second) + ") has " +
               std::to_string(lambdas.size()) + " compatible λ");
    }
  }
  return {units.size(), by_lambda.size(), by_rho.size()};
}

DeterminationReport determination_check(const TensorStructure& s, const SearchOptions& opts) {
  return determination_check(enumerate_units(s, opts));
}

UnitCandidate transport_unit(const TensorStructure& s, const UnitCandidate& u, MorId f,
                             MorId f_inv) {
  const FinCategory& c = s.base();
  const int m = c.morphism_count();
  if (f < 0 || f >= m || f_inv < 0 || f_inv >= m || c.dst(f) != u.unit ||
      c.src(f_inv) != u.unit || c.dst(f_inv) != c.src(f) ||
      c.compose(f_inv, f) != c.identity(c.src(f)) || c.compose(f, f_inv) != c.identity(u.unit)) {
    throw Error(ErrorKind::NotAnIsomorphism,
                "#" + std::to_string(f_inv) + " is not a two-sided inverse of #" +
                    std::to_string(f) + " into object " + std::to_string(u.unit));
  }
  require_unit(s, u);
  const ObjId j = c.src(f);
  const int n = c.object_count();
  std::vector<MorId> lambda(static_cast<std::size_t>(n));
  std::vector<MorId> rho(static_cast<std::size_t>(n));
  for (ObjId x = 0; x < n; ++x) {
    lambda[static_cast<std::size_t>(x)] =
        c.compose({u.lambda.at(x), s.tensor_mor(f, c.identity(x))});
    rho[static_cast<std::size_t>(x)] = c.compose({s.tensor_mor(c.identity(x), f_inv), u.rho.at(x)});
  }
  UnitCandidate out = UnitCandidate::make(s, j, std::move(lambda), std::move(rho));
  if (!check_all(s, out, AxiomMask::unit_axioms()).all_pass()) {
    violated("transport of " + describe(u) + " along #" + std::to_string(f) +
             " is not a unit: " + describe(out));
  }
  return out;
}

UnitCandidate tensor_of_units(const TensorStructure& s, const UnitCandidate& u,
                              const UnitCandidate& v) {
  const MorId f = u.lambda.at(v.unit);
  const auto inv = f == kNoMorphism ? std::nullopt : s.base().inverse(f);
  if (!inv) {
    throw Error(ErrorKind::NotAnIsomorphism,
                "λ_J is not invertible for units at " + std::to_string(u.unit) + " and " +
                    std::to_string(v.unit));
  }
  return transport_unit(s, v, f, *inv);
}

TensorSquare tensor_square_candidate(const TensorStructure& s, const UnitCandidate& u) {
  require_unit(s, u);
  const FinCategory& c = s.base();
  const int n = c.object_count();
  const ObjId ii = s.tensor(u.unit, u.unit);
  const MorId lambda_i = u.lambda.at(u.unit);
  const MorId rho_i = u.rho.at(u.unit);
  std::vector<MorId> lambda(static_cast<std::size_t>(n));
  std::vector<MorId> rho(static_cast<std::size_t>(n));
  for (ObjId x = 0; x < n; ++x) {
    lambda[static_cast<std::size_t>(x)] =
        c.compose({u.lambda.at(x), s.tensor_mor(lambda_i, c.identity(x))});
    rho[static_cast<std::size_t>(x)] = c.compose({s.tensor_mor(c.identity(x), rho_i), u.rho.at(x)});
  }
  TensorSquare out{UnitCandidate::make(s, ii, std::move(lambda), std::move(rho)), false, false};
  out.is_unit = check_all(s, out.candidate, AxiomMask::unit_axioms()).all_pass();
  out.lambda_invertible = c.is_iso(lambda_i);
  if (out.is_unit != out.lambda_invertible) {
    violated("I⊗I candidate is_unit = " + std::to_string(out.is_unit) +
             " but λ_I invertible = " + std::to_string(out.lambda_invertible) + " for " +
             describe(u));
  }
  return out;
}

EndMonoidResult end_monoid_commutative(const TensorStructure& s, const UnitCandidate& u) {
  require_unit(s, u);
  const FinCategory& c = s.base();
  EndMonoidResult out;
  const auto hom = c.hom(u.unit, u.unit);
  out.monoid.carrier.assign(hom.begin(), hom.end());
  out.monoid.unit = c.identity(u.unit);
  const std::size_t k = out.monoid.size();
  const auto index_of = [&](MorId f) {
    return static_cast<int>(std::find(hom.begin(), hom.end(), f) - hom.begin());
  };
  out.monoid.table.resize(k * k);
  out.commutative = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.monoid.table[i * k + j] = index_of(c.compose(hom[i], hom[j]));
      if (c.compose(hom[i], hom[j]) != c.compose(hom[j], hom[i])) out.commutative = false;
    }
  }
  out.weakly_normal = c.is_iso(u.lambda.at(u.unit));
  if (out.weakly_normal && !out.commutative) {
    violated("End(I) is not commutative for the weakly normal unit " + describe(u));
  }
  return out;
}

bool invertible_units_lemma_check(const TensorStructure& s, const UnitCandidate& u) {
  const FinCategory& c = s.base();
  std::vector<std::string> missing;
  if (!check_left_unit(s, u).ok()) missing.emplace_back("left unit axiom");
  if (!check_mid_unit(s, u).ok()) missing.emplace_back("mid unit axiom");
  const auto all_iso = [&](const MorphismFamily& fam) {
    return std::all_of(fam.components().begin(), fam.components().end(),
                       [&](MorId f) { return f != kNoMorphism && c.is_iso(f); });
  };
  if (!all_iso(u.lambda)) missing.emplace_back("invertible λ");
  if (!all_iso(u.rho)) missing.emplace_back("invertible ρ");
  if (!missing.empty()) {
    std::string msg = "unmet hypotheses:";
    for (const auto& m : missing) msg += " " + m + ";";
    throw Error(ErrorKind::PreconditionUnmet, msg);
  }
  const bool holds = check_unit_unit(s, u).ok();
  if (!holds) violated("unit-unit axiom fails for " + describe(u));
  return holds;
}

bool unit_unit_is_unit_morphism(const TensorStructure& s, const UnitCandidate& u) {
  const MorId f = s.base().compose({u.lambda.at(u.unit), u.rho.at(u.unit)});
  return f != kNoMorphism && is_unit_morphism(s, u, u, f);
}

}  // namespace skewcheck
