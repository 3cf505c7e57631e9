#include "skewcheck/setmodels.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <string>

namespace skewcheck {

Magma Magma::make(int size, std::vector<int> table, int designated) {
  std::vector<Violation> bad;
  if (size < 1) bad.push_back({ErrorKind::MalformedTable, "magma size must be positive", {size}});
  if (size >= 1 && table.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    bad.push_back({ErrorKind::MalformedTable,
                   "magma table needs " + std::to_string(size * size) + " entries",
                   {static_cast<std::int32_t>(table.size())}});
  }
  if (designated < 0 || designated >= std::max(size, 0)) {
    bad.push_back({ErrorKind::MalformedTable, "designated element out of range", {designated}});
  }
  if (bad.empty()) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] < 0 || table[i] >= size) {
        bad.push_back({ErrorKind::MalformedTable, "table entry out of range",
                       {static_cast<std::int32_t>(i) / size, static_cast<std::int32_t>(i) % size}});
      }
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return Magma{size, std::move(table), designated};
}

bool Magma::associative() const {
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) return false;
      }
    }
  }
  return true;
}

bool Magma::left_identity(int e) const {
  for (int x = 0; x < size; ++x) {
    if (op(e, x) != x) return false;
  }
  return true;
}

bool Magma::right_identity(int e) const {
  for (int x = 0; x < size; ++x) {
    if (op(x, e) != x) return false;
  }
  return true;
}

std::string element_name(const Magma& m, int x) {
  if (x == m.designated) return "1";
  const int rank = x < m.designated ? x : x - 1;
  return std::string(1, static_cast<char>('a' + rank));
}

PointwiseModel PointwiseModel::magma_model(Magma m, std::vector<int> sizes) {
  return PointwiseModel{ModelKind::Magma, std::move(m), std::move(sizes)};
}

PointwiseModel PointwiseModel::cartesian_unitunit(std::vector<int> sizes) {
  return PointwiseModel{ModelKind::CartesianUnitUnit, Magma{1, {0}, 0}, std::move(sizes)};
}

std::string AxiomSignature::to_string() const {
  std::string out;
  for (bool b : holds) out += b ? 'T' : 'F';
  return out;
}

AxiomSignature AxiomSignature::parse(const std::string& text) {
  if (text.size() != 5 || text.find_first_not_of("TF") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "signature must be five T/F letters, got '" + text + "'");
  }
  AxiomSignature s;
  for (std::size_t i = 0; i < 5; ++i) s.holds[i] = text[i] == 'T';
  return s;
}

AxiomSignature AxiomSignature::all_true() {
  AxiomSignature s;
  s.holds.fill(true);
  return s;
}

AxiomSignature dual_signature(AxiomSignature s) {
  std::swap(s[Axiom::LeftUnit], s[Axiom::RightUnit]);
  return s;
}

namespace {

using Flat = std::vector<int>;
using Map = std::function<void(Flat&)>;

Flat slice(const Flat& v, std::size_t from, std::size_t to) {
  return Flat(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

// α on (A⊗B)⊗C: [m, n, A, B, C] -> [m·n, A, m, B, C].
Map alpha(const Magma& M, std::size_t wa, std::size_t wb) {
  return [&M, wa, wb](Flat& v) {
    const int m = v[0];
    const int n = v[1];
    Flat out;
    out.reserve(v.size());
    out.push_back(M.op(m, n));
    out.insert(out.end(), v.begin() + 2, v.begin() + 2 + static_cast<std::ptrdiff_t>(wa));
    out.push_back(m);
    out.insert(out.end(), v.begin() + 2 + static_cast<std::ptrdiff_t>(wa), v.end());
    (void)wb;
    v = std::move(out);
  };
}

// λ on I⊗X: [m, i, X] -> X.
Map lambda_map() {
  return [](Flat& v) { v.erase(v.begin(), v.begin() + 2); };
}

// ρ on X: X -> [1, X, i0].
Map rho_map(int one, int point) {
  return [one, point](Flat& v) {
    v.insert(v.begin(), one);
    v.push_back(point);
  };
}

// f⊗g on A⊗B: [m, A, B] -> [m, f(A), g(B)]; empty maps are identities.
Map tensor(Map f, std::size_t wa, Map g) {
  return [f = std::move(f), wa, g = std::move(g)](Flat& v) {
    Flat a = slice(v, 1, 1 + wa);
    Flat b = slice(v, 1 + wa, v.size());
    if (f) f(a);
    if (g) g(b);
    const int m = v[0];
    v.clear();
    v.push_back(m);
    v.insert(v.end(), a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
  };
}

// Compares two composites on every element of the domain with the given
// per-coordinate sizes; returns the first differing element.
std::vector<int> first_difference(const std::vector<int>& radices, const std::vector<Map>& lhs,
                                  const std::vector<Map>& rhs) {
  Flat elem(radices.size(), 0);
  if (std::any_of(radices.begin(), radices.end(), [](int r) { return r <= 0; })) return {};
  Flat l;
  Flat r;
  while (true) {
    l = elem;
    for (const auto& f : lhs) f(l);
    r = elem;
    for (const auto& f : rhs) f(r);
    if (l != r) return elem;
    std::size_t i = radices.size();
    while (i > 0 && ++elem[i - 1] == radices[i - 1]) elem[--i] = 0;
    if (i == 0) return {};
  }
}

// Calls fn for every assignment of test sizes to `vars` variables.
void for_each_sizes(const std::vector<int>& sizes, int vars,
                    const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<std::size_t> pos(static_cast<std::size_t>(vars), 0);
  std::vector<int> pick(static_cast<std::size_t>(vars));
  if (sizes.empty()) return;
  while (true) {
    for (std::size_t i = 0; i < pos.size(); ++i) pick[i] = sizes[pos[i]];
    if (!fn(pick)) return;
    std::size_t i = pos.size();
    while (i > 0 && ++pos[i - 1] == sizes.size()) pos[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

ModelEvaluation evaluate_model(const PointwiseModel& model) {
  const Magma& M = model.magma;
  const int k = M.size;
  const int one = M.designated;
  const int unit_size = model.unit_size();
  constexpr int point = 0;
  if (std::any_of(model.test_sizes.begin(), model.test_sizes.end(), [](int s) { return s < 1; })) {
    throw Error(ErrorKind::PreconditionUnmet, "test sizes must be at least 1");
  }

  ModelEvaluation out;
  const auto run = [&](Axiom a, int vars, const std::function<std::vector<int>(const std::vector<int>&)>& check) {
    std::vector<int> witness;
    for_each_sizes(model.test_sizes, vars, [&](const std::vector<int>& sz) {
      witness = check(sz);
      return witness.empty();
    });
    out.signature[a] = witness.empty();
    out.witnesses[static_cast<std::size_t>(a)] = std::move(witness);
  };

  // ((W⊗X)⊗Y)⊗Z = [a, b, c, w, x, y, z].
  run(Axiom::Pentagon, 4, [&](const std::vector<int>& s) {
    return first_difference({k, k, k, s[0], s[1], s[2], s[3]},
                            {alpha(M, 3, 1), alpha(M, 1, 1)},
                            {tensor(alpha(M, 1, 1), 5, nullptr), alpha(M, 1, 3),
                             tensor(nullptr, 1, alpha(M, 1, 1))});
  });
  // (I⊗X)⊗Y = [m, n, i, x, y].
  run(Axiom::LeftUnit, 2, [&](const std::vector<int>& s) {
    return first_difference({k, k, unit_size, s[0], s[1]}, {alpha(M, 1, 1), lambda_map()},
                            {tensor(lambda_map(), 3, nullptr)});
  });
  // X⊗Y = [m, x, y].
  run(Axiom::MidUnit, 2, [&](const std::vector<int>& s) {
    return first_difference({k, s[0], s[1]},
                            {tensor(rho_map(one, point), 1, nullptr), alpha(M, 1, 1),
                             tensor(nullptr, 1, lambda_map())},
                            {});
  });
  run(Axiom::RightUnit, 2, [&](const std::vector<int>& s) {
    return first_difference({k, s[0], s[1]}, {rho_map(one, point), alpha(M, 1, 1)},
                            {tensor(nullptr, 1, rho_map(one, point))});
  });
  // I = [i].
  run(Axiom::UnitUnit, 0, [&](const std::vector<int>&) {
    return first_difference({unit_size}, {rho_map(one, point), lambda_map()}, {});
  });
  return out;
}

std::vector<NamedModel> builtin_models() {
  // Elements: 0 = 1, 1 = a, 2 = b.
  return {
      {"paper-left", PointwiseModel::magma_model(Magma::make(3, {0, 1, 2, 1, 0, 2, 2, 1, 0}, 0))},
      {"paper-mid", PointwiseModel::magma_model(Magma::make(2, {0, 1, 0, 1}, 0))},
      {"paper-right", PointwiseModel::magma_model(Magma::make(2, {0, 0, 1, 1}, 0))},
      {"paper-unitunit", PointwiseModel::cartesian_unitunit()},
  };
}

AxiomSignature table_signature(const Magma& m) {
  AxiomSignature s;
  s[Axiom::Pentagon] = m.associative();
  s[Axiom::LeftUnit] = true;
  s[Axiom::MidUnit] = m.right_identity(m.designated);
  s[Axiom::RightUnit] = m.left_identity(m.designated);
  s[Axiom::UnitUnit] = true;
  return s;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t tables_of_size(int k) {
  std::uint64_t t = 1;
  for (int i = 0; i < k * k; ++i) t = sat_mul(t, static_cast<std::uint64_t>(k));
  return t;
}

Magma decode_table(int k, std::uint64_t index, int designated) {
  Magma m{k, std::vector<int>(static_cast<std::size_t>(k * k)), designated};
  for (std::size_t i = m.table.size(); i > 0; --i) {
    m.table[i - 1] = static_cast<int>(index % static_cast<std::uint64_t>(k));
    index /= static_cast<std::uint64_t>(k);
  }
  return m;
}

int signature_code(const AxiomSignature& s) {
  int code = 0;
  for (bool b : s.holds) code = code * 2 + (b ? 1 : 0);
  return code;
}

struct Tally {
  std::array<std::uint64_t, 32> count{};
  std::array<std::uint64_t, 32> first{};  // global enumeration position

  Tally() { first.fill(kSaturated); }

  void add(int code, std::uint64_t position) {
    ++count[static_cast<std::size_t>(code)];
    first[static_cast<std::size_t>(code)] = std::min(first[static_cast<std::size_t>(code)], position);
  }
  void merge(const Tally& o) {
    for (std::size_t i = 0; i < 32; ++i) {
      count[i] += o.count[i];
      first[i] = std::min(first[i], o.first[i]);
    }
  }
};

void check_census_bounds(int max_size, std::uint64_t budget) {
  if (max_size < 1) throw Error(ErrorKind::PreconditionUnmet, "census bound must be at least 1");
  const std::uint64_t size = census_size(max_size);
  if (size > budget) throw SearchBudgetExceeded(size, budget);
}

Magma magma_at(int max_size, std::uint64_t position) {
  for (int k = 2; k <= max_size; ++k) {
    const std::uint64_t tables = tables_of_size(k);
    const std::uint64_t block = tables * static_cast<std::uint64_t>(k);
    if (position < block) {
      return decode_table(k, position % tables, static_cast<int>(position / tables));
    }
    position -= block;
  }
  throw Error(ErrorKind::PreconditionUnmet, "census position out of range");
}

Census finish(int max_size, const Tally& tally) {
  Census c;
  c.max_size = max_size;
  for (std::size_t code = 0; code < 32; ++code) {
    if (tally.count[code] == 0) continue;
    AxiomSignature s;
    for (std::size_t i = 0; i < 5; ++i) s.holds[i] = ((code >> (4 - i)) & 1U) != 0;
    c.total += tally.count[code];
    c.entries.push_back({s, tally.count[code], magma_at(max_size, tally.first[code])});
  }
  std::sort(c.entries.begin(), c.entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return a.signature.to_string() < b.signature.to_string();
  });
  return c;
}

}  // namespace

std::uint64_t census_size(int max_size) {
  std::uint64_t total = 0;
  for (int k = 2; k <= max_size; ++k) {
    const std::uint64_t add = sat_mul(tables_of_size(k), static_cast<std::uint64_t>(k));
    total = add > kSaturated - total ? kSaturated : total + add;
  }
  return total;
}

Census census(int max_size, std::uint64_t budget) {
  check_census_bounds(max_size, budget);
  Tally tally;
  std::uint64_t offset = 0;
  for (int k = 2; k <= max_size; ++k) {
    const auto block = static_cast<std::int64_t>(tables_of_size(k) * static_cast<std::uint64_t>(k));
    const std::uint64_t tables = tables_of_size(k);
#pragma omp parallel
    {
      Tally local;
#pragma omp for schedule(static)
      for (std::int64_t p = 0; p < block; ++p) {
        const auto pos = static_cast<std::uint64_t>(p);
        const Magma m = decode_table(k, pos % tables, static_cast<int>(pos / tables));
        local.add(signature_code(evaluate_model(PointwiseModel::magma_model(m)).signature),
                  offset + pos);
      }
#pragma omp critical
      tally.merge(local);
    }
    offset += static_cast<std::uint64_t>(block);
  }
  return finish(max_size, tally);
}

Census serial::census(int max_size, std::uint64_t budget) {
  check_census_bounds(max_size, budget);
  Tally tally;
  std::uint64_t position = 0;
  for (int k = 2; k <= max_size; ++k) {
    const std::uint64_t tables = tables_of_size(k);
    for (int d = 0; d < k; ++d) {
      for (std::uint64_t t = 0; t < tables; ++t) {
        const Magma m = decode_table(k, t, d);
        tally.add(signature_code(evaluate_model(PointwiseModel::magma_model(m)).signature),
                  position++);
      }
    }
  }
  return finish(max_size, tally);
}

// ---------------------------------------------------------------------------
// Finite fragment of the set model.

namespace {

struct Word {
  int leaf = -1;  // index into leaf sizes, or -1 for a tensor node
  ObjId left = kNoObject;
  ObjId right = kNoObject;
  int nodes = 0;
  std::vector<int> radices;  // flat coordinate sizes in preorder
  int card = 1;
  std::string name;
};

struct Fragment {
  const Magma& M;
  int one;
  int point = 0;
  std::vector<Word> words;
  std::map<std::pair<ObjId, ObjId>, ObjId> tensor_of;

  ObjId tensor(ObjId a, ObjId b) const {
    const auto it = tensor_of.find({a, b});
    return it == tensor_of.end() ? kNoObject : it->second;
  }

  Flat decode(ObjId w, int index) const {
    const auto& r = words[static_cast<std::size_t>(w)].radices;
    Flat v(r.size());
    for (std::size_t i = r.size(); i > 0; --i) {
      v[i - 1] = index % r[i - 1];
      index /= r[i - 1];
    }
    return v;
  }
  int encode(ObjId w, const Flat& v) const {
    const auto& r = words[static_cast<std::size_t>(w)].radices;
    int index = 0;
    for (std::size_t i = 0; i < r.size(); ++i) index = index * r[i] + v[i];
    return index;
  }
  std::size_t width(ObjId w) const { return words[static_cast<std::size_t>(w)].radices.size(); }

  std::vector<int> table(ObjId src, ObjId dst, const Map& f) const {
    std::vector<int> t(static_cast<std::size_t>(words[static_cast<std::size_t>(src)].card));
    for (std::size_t e = 0; e < t.size(); ++e) {
      Flat v = decode(src, static_cast<int>(e));
      f(v);
      t[e] = encode(dst, v);
    }
    return t;
  }
};

struct Function {
  ObjId src;
  ObjId dst;
  std::vector<int> table;
};

}  // namespace

FiniteModel to_finite_structure(const PointwiseModel& model, int depth) {
  if (depth < 0) throw Error(ErrorKind::PreconditionUnmet, "depth must be non-negative");
  Fragment fr{model.magma, model.magma.designated, 0, {}, {}};
  const int k = model.magma.size;

  std::vector<int> leaf_sizes = {model.unit_size()};
  std::vector<std::string> leaf_names = {"I"};
  for (int s : model.test_sizes) {
    if (s < 1) throw Error(ErrorKind::PreconditionUnmet, "test sizes must be at least 1");
    if (s == model.unit_size() ||
        std::find(leaf_sizes.begin(), leaf_sizes.end(), s) != leaf_sizes.end()) {
      continue;
    }
    leaf_sizes.push_back(s);
    leaf_names.push_back("V" + std::to_string(s));
  }

  std::vector<std::vector<ObjId>> by_nodes(static_cast<std::size_t>(depth) + 1);
  for (std::size_t l = 0; l < leaf_sizes.size(); ++l) {
    Word w;
    w.leaf = static_cast<int>(l);
    w.radices = {leaf_sizes[l]};
    w.card = leaf_sizes[l];
    w.name = leaf_names[l];
    by_nodes[0].push_back(static_cast<ObjId>(fr.words.size()));
    fr.words.push_back(std::move(w));
  }
  const auto over_cap = [&] {
    if (fr.words.size() > static_cast<std::size_t>(kMaxObjects)) {
      throw ValidationError({{ErrorKind::CapExceeded,
                              "set-model fragment needs more than " + std::to_string(kMaxObjects) +
                                  " objects at depth " + std::to_string(depth),
                              {static_cast<std::int32_t>(fr.words.size())}}});
    }
  };
  for (int nodes = 1; nodes <= depth; ++nodes) {
    for (int a = 0; a < nodes; ++a) {
      for (ObjId l : by_nodes[static_cast<std::size_t>(a)]) {
        for (ObjId r : by_nodes[static_cast<std::size_t>(nodes - 1 - a)]) {
          Word w;
          w.left = l;
          w.right = r;
          w.nodes = nodes;
          const Word& wl = fr.words[static_cast<std::size_t>(l)];
          const Word& wr = fr.words[static_cast<std::size_t>(r)];
          w.radices.push_back(k);
          w.radices.insert(w.radices.end(), wl.radices.begin(), wl.radices.end());
          w.radices.insert(w.radices.end(), wr.radices.begin(), wr.radices.end());
          w.card = k * wl.card * wr.card;
          w.name = "(" + wl.name + "⊗" + wr.name + ")";
          const auto id = static_cast<ObjId>(fr.words.size());
          fr.tensor_of[{l, r}] = id;
          by_nodes[static_cast<std::size_t>(nodes)].push_back(id);
          fr.words.push_back(std::move(w));
          over_cap();
        }
      }
    }
  }
  const auto n = static_cast<ObjId>(fr.words.size());
  const ObjId unit = 0;

  std::vector<Function> mors;
  std::map<std::tuple<ObjId, ObjId, std::vector<int>>, MorId> index;
  std::deque<MorId> fresh;
  const auto add = [&](ObjId src, ObjId dst, std::vector<int> table) {
    auto key = std::make_tuple(src, dst, table);
    if (const auto it = index.find(key); it != index.end()) return it->second;
    if (mors.size() >= static_cast<std::size_t>(kMaxMorphisms)) {
      throw ValidationError({{ErrorKind::CapExceeded,
                              "set-model fragment needs more than " +
                                  std::to_string(kMaxMorphisms) + " morphisms",
                              {}}});
    }
    const auto id = static_cast<MorId>(mors.size());
    mors.push_back({src, dst, std::move(table)});
    index.emplace(std::move(key), id);
    fresh.push_back(id);
    return id;
  };

  for (ObjId x = 0; x < n; ++x) add(x, x, fr.table(x, x, [](Flat&) {}));
  std::vector<MorId> assoc(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                               static_cast<std::size_t>(n),
                           kNoMorphism);
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (ObjId z = 0; z < n; ++z) {
        const ObjId a = fr.tensor(fr.tensor(x, y), z);
        const ObjId b = fr.tensor(x, fr.tensor(y, z));
        if (a == kNoObject || b == kNoObject) continue;
        assoc[(static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(y)) *
                  static_cast<std::size_t>(n) +
              static_cast<std::size_t>(z)] =
            add(a, b, fr.table(a, b, alpha(fr.M, fr.width(x), fr.width(y))));
      }
    }
  }
  std::vector<MorId> lambda(static_cast<std::size_t>(n), kNoMorphism);
  std::vector<MorId> rho(static_cast<std::size_t>(n), kNoMorphism);
  for (ObjId x = 0; x < n; ++x) {
    if (const ObjId ix = fr.tensor(unit, x); ix != kNoObject) {
      lambda[static_cast<std::size_t>(x)] = add(ix, x, fr.table(ix, x, lambda_map()));
    }
    if (const ObjId xi = fr.tensor(x, unit); xi != kNoObject) {
      rho[static_cast<std::size_t>(x)] = add(x, xi, fr.table(x, xi, rho_map(fr.one, fr.point)));
    }
  }

  const auto tensor_table = [&](const Function& f, const Function& g, ObjId src, ObjId dst) {
    const std::size_t wa = fr.width(f.src);
    std::vector<int> t(static_cast<std::size_t>(fr.words[static_cast<std::size_t>(src)].card));
    for (std::size_t e = 0; e < t.size(); ++e) {
      const Flat v = fr.decode(src, static_cast<int>(e));
      const Flat a = fr.decode(
          f.dst, f.table[static_cast<std::size_t>(fr.encode(f.src, slice(v, 1, 1 + wa)))]);
      const Flat b = fr.decode(
          g.dst, g.table[static_cast<std::size_t>(fr.encode(g.src, slice(v, 1 + wa, v.size())))]);
      Flat out{v[0]};
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
      t[e] = fr.encode(dst, out);
    }
    return t;
  };
  const auto compose_table = [](const Function& g, const Function& f) {
    std::vector<int> t(f.table.size());
    for (std::size_t e = 0; e < t.size(); ++e) {
      t[e] = g.table[static_cast<std::size_t>(f.table[e])];
    }
    return t;
  };
  const auto combine = [&](MorId p, MorId q) {
    // Copies: `add` may grow `mors`.
    const Function f = mors[static_cast<std::size_t>(p)];
    const Function g = mors[static_cast<std::size_t>(q)];
    if (f.dst == g.src) add(f.src, g.dst, compose_table(g, f));
    const ObjId src = fr.tensor(f.src, g.src);
    const ObjId dst = fr.tensor(f.dst, g.dst);
    if (src != kNoObject && dst != kNoObject) add(src, dst, tensor_table(f, g, src, dst));
  };
  while (!fresh.empty()) {
    const MorId h = fresh.front();
    fresh.pop_front();
    for (MorId e = 0; e <= h; ++e) {
      combine(h, e);
      if (e != h) combine(e, h);
    }
  }

  RawCategory raw;
  raw.objects = n;
  for (const auto& f : mors) raw.morphisms.push_back({f.src, f.dst});
  for (ObjId x = 0; x < n; ++x) raw.identities.push_back(x);
  const auto m = static_cast<MorId>(mors.size());
  std::vector<MorId> mor_tensor(static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
                                kNoMorphism);
  for (MorId g = 0; g < m; ++g) {
    const Function& gf = mors[static_cast<std::size_t>(g)];
    for (MorId f = 0; f < m; ++f) {
      const Function& ff = mors[static_cast<std::size_t>(f)];
      if (ff.dst == gf.src) {
        raw.comp.push_back({g, f, index.at({ff.src, gf.dst, compose_table(gf, ff)})});
      }
      const ObjId src = fr.tensor(gf.src, ff.src);
      const ObjId dst = fr.tensor(gf.dst, ff.dst);
      if (src != kNoObject && dst != kNoObject) {
        mor_tensor[static_cast<std::size_t>(g) * static_cast<std::size_t>(m) +
                   static_cast<std::size_t>(f)] = index.at({src, dst, tensor_table(gf, ff, src, dst)});
      }
    }
  }
  std::vector<ObjId> obj_tensor(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      obj_tensor[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(y)] = fr.tensor(x, y);
    }
  }

  TensorStructure s = TensorStructure::make(share(FinCategory::validate(raw)),
                                            std::move(obj_tensor), std::move(mor_tensor),
                                            std::move(assoc));
  UnitCandidate u = UnitCandidate::make(s, unit, std::move(lambda), std::move(rho));
  FiniteModel out{{std::move(s), std::move(u)}, {}};
  for (const auto& w : fr.words) out.object_names.push_back(w.name);
  return out;
}

}  // namespace skewcheck
