#include "skewcheck/io.hpp"

#include <fstream>
#include <sstream>

namespace skewcheck::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + where + "': " + what);
}

const json& need(const json& j, const std::string& key) {
  if (!j.is_object()) bad("<root>", "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < -1 || v > 1'000'000) bad(where, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> int_array(const json& j, const std::string& where, std::size_t len) {
  auto out = int_array(j, where);
  if (out.size() != len) {
    bad(where, "expected " + std::to_string(len) + " entries, got " + std::to_string(out.size()));
  }
  return out;
}

// rows x cols nested table, flattened row-major.
std::vector<int> table(const json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    bad(where, "expected " + std::to_string(rows) + " rows");
  }
  std::vector<int> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = int_array(j[r], where + "[" + std::to_string(r) + "]", cols);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

json rows_of(const std::vector<int>& flat, std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; cols != 0 && r < flat.size() / cols; ++r) {
    out.push_back(std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                   flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols)));
  }
  return out;
}

}  // namespace

json parse_document(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

RawCategory category_from_json(const json& j) {
  RawCategory raw;
  raw.objects = as_int(need(j, "objects"), "objects");
  if (raw.objects < 0) bad("objects", "must be non-negative");
  const json& mors = need(j, "morphisms");
  if (!mors.is_array()) bad("morphisms", "expected an array");
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const auto p = int_array(mors[i], "morphisms[" + std::to_string(i) + "]", 2);
    raw.morphisms.push_back({p[0], p[1]});
  }
  raw.identities = int_array(need(j, "identities"), "identities");
  const json& comp = need(j, "comp");
  if (!comp.is_array()) bad("comp", "expected an array");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const auto t = int_array(comp[i], "comp[" + std::to_string(i) + "]", 3);
    raw.comp.push_back({t[0], t[1], t[2]});
  }
  return raw;
}

json to_json(const FinCategory& c) {
  const RawCategory raw = c.to_raw();
  json j;
  j["objects"] = raw.objects;
  j["morphisms"] = raw.morphisms;
  j["identities"] = raw.identities;
  j["comp"] = raw.comp;
  return j;
}

StructureFile structure_from_json(const json& j) {
  CategoryPtr c = share(FinCategory::validate(category_from_json(j)));
  const auto n = static_cast<std::size_t>(c->object_count());
  const auto m = static_cast<std::size_t>(c->morphism_count());
  auto obj = table(need(j, "obj_tensor"), "obj_tensor", n, n);
  auto mor = table(need(j, "mor_tensor"), "mor_tensor", m, m);
  auto assoc = int_array(need(j, "assoc"), "assoc", n * n * n);
  TensorStructure s = TensorStructure::make(std::move(c), std::move(obj), std::move(mor),
                                            std::move(assoc));
  StructureFile out{std::move(s), std::nullopt};
  if (const auto it = j.find("unit"); it != j.end() && !it->is_null()) {
    const ObjId unit = as_int(*it, "unit");
    if (unit < 0 || static_cast<std::size_t>(unit) >= n) bad("unit", "not an object");
    auto lambda = int_array(need(j, "lambda"), "lambda", n);
    auto rho = int_array(need(j, "rho"), "rho", n);
    out.unit = UnitCandidate::make(out.tensor, unit, std::move(lambda), std::move(rho));
  }
  return out;
}

json to_json(const TensorStructure& s, const UnitCandidate* unit) {
  json j = to_json(s.base());
  j["obj_tensor"] = rows_of(s.obj_tensor_table(), static_cast<std::size_t>(s.base().object_count()));
  j["mor_tensor"] =
      rows_of(s.mor_tensor_table(), static_cast<std::size_t>(s.base().morphism_count()));
  j["assoc"] = s.assoc_family().components();
  if (unit != nullptr) {
    j["unit"] = unit->unit;
    j["lambda"] = unit->lambda.components();
    j["rho"] = unit->rho.components();
  }
  return j;
}

bool is_model_document(const json& j) { return j.is_object() && j.contains("rows"); }

PointwiseModel model_from_json(const json& j) {
  const int size = as_int(need(j, "size"), "size");
  if (size < 1 || size > 16) bad("size", "must be between 1 and 16");
  auto rows = table(need(j, "rows"), "rows", static_cast<std::size_t>(size),
                    static_cast<std::size_t>(size));
  const int designated = as_int(need(j, "designated"), "designated");
  std::vector<int> sizes = {1};
  if (const auto it = j.find("test_sizes"); it != j.end()) {
    sizes = int_array(*it, "test_sizes");
    if (sizes.empty()) bad("test_sizes", "must not be empty");
    for (int s : sizes) {
      if (s < 1 || s > 4) bad("test_sizes", "sizes must be between 1 and 4");
    }
  }
  std::string kind = "magma";
  if (const auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) bad("kind", "expected a string");
    kind = it->get<std::string>();
  }
  Magma m = Magma::make(size, std::move(rows), designated);
  if (kind == "magma") return PointwiseModel::magma_model(std::move(m), std::move(sizes));
  if (kind == "cartesian-unitunit") {
    if (m.size != 1) bad("size", "the cartesian model has a one-point magma");
    return PointwiseModel::cartesian_unitunit(std::move(sizes));
  }
  bad("kind", "unknown model kind '" + kind + "'");
}

json to_json(const Magma& m) {
  json j;
  j["size"] = m.size;
  j["rows"] = rows_of(m.table, static_cast<std::size_t>(m.size));
  j["designated"] = m.designated;
  return j;
}

json to_json(const PointwiseModel& m) {
  json j;
  j["kind"] = m.kind == ModelKind::Magma ? "magma" : "cartesian-unitunit";
  j.update(to_json(m.magma));
  j["test_sizes"] = m.test_sizes;
  return j;
}

FunctorFile functor_from_json(const json& j) {
  FunctorFile f;
  f.obj_map = int_array(need(j, "obj_map"), "obj_map");
  f.mor_map = int_array(need(j, "mor_map"), "mor_map");
  f.phi = table(need(j, "phi"), "phi", f.obj_map.size(), f.obj_map.size());
  if (const auto it = j.find("f0"); it != j.end() && !it->is_null()) f.f0 = as_int(*it, "f0");
  return f;
}

json to_json(const MonoidalFunctorData& d) {
  json j;
  j["obj_map"] = d.functor.object_map();
  j["mor_map"] = d.functor.morphism_map();
  j["phi"] = rows_of(d.phi.components(), static_cast<std::size_t>(d.phi.index_objects()));
  j["f0"] = d.f0 == kNoMorphism ? json(nullptr) : json(d.f0);
  return j;
}

json to_json(const AxiomReport& r) {
  json out = json::array();
  for (Axiom a : kAxioms) {
    out.push_back({{"axiom", axiom_name(a)},
                   {"status", to_string(r[a].status)},
                   {"witness", r[a].witness}});
  }
  return out;
}

json to_json(const Census& c) {
  json j;
  j["max_size"] = c.max_size;
  j["total"] = c.total;
  j["entries"] = json::array();
  for (const auto& e : c.entries) {
    j["entries"].push_back(
        {{"signature", e.signature.to_string()}, {"count", e.count}, {"witness", to_json(e.witness)}});
  }
  return j;
}

json to_json(const UnitCandidate& u) {
  return {{"unit", u.unit}, {"lambda", u.lambda.components()}, {"rho", u.rho.components()}};
}

json to_json(const Normality& n) {
  return {{"weakly_normal", n.weakly_normal},
          {"left_normal", n.left_normal},
          {"right_normal", n.right_normal},
          {"normal", n.normal}};
}

json to_json(const MonoidalReport& r) {
  return {{"assoc_ok", r.assoc_ok},
          {"unit_ok", r.unit_ok},
          {"assoc_witness", r.assoc_witness},
          {"unit_witness", r.unit_witness}};
}

}  // namespace skewcheck::io
