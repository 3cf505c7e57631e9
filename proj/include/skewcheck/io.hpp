#pragma once

// JSON file formats and report serializers.
//
// category:  {"objects": n, "morphisms": [[src, dst], ...], "identities": [...],
//             "comp": [[g, f, g∘f], ...]}
// structure: category fields plus "obj_tensor" (n rows of n), "mor_tensor"
//            (m rows of m), "assoc" (n^3 components in (x, y, z) order) and
//            optionally "unit", "lambda", "rho". -1 marks an undefined entry.
// model:     {"size": k, "rows": [[...], ...], "designated": d} with optional
//            "kind" ("magma" or "cartesian-unitunit") and "test_sizes".
// functor:   {"obj_map": [...], "mor_map": [...], "phi": n rows of n,
//             "f0": id or null}
//
// Every loader throws Error(ParseError) naming the offending field; JSON
// syntax errors carry line and column.

#include <optional>
#include <string>

#include "json.hpp"
#include "skewcheck/monfun.hpp"
#include "skewcheck/setmodels.hpp"

namespace skewcheck::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parses JSON text; `origin` prefixes diagnostics.
json parse_document(const std::string& text, const std::string& origin);
json load_file(const std::string& path);

RawCategory category_from_json(const json& j);
json to_json(const FinCategory& c);

struct StructureFile {
  TensorStructure tensor;
  std::optional<UnitCandidate> unit;
};

/// Validates through FinCategory, TensorStructure and UnitCandidate, so
/// ValidationError may escape as well.
StructureFile structure_from_json(const json& j);
json to_json(const TensorStructure& s, const UnitCandidate* unit = nullptr);

/// A document with "rows" is a model, anything else a structure.
bool is_model_document(const json& j);

PointwiseModel model_from_json(const json& j);
json to_json(const PointwiseModel& m);
json to_json(const Magma& m);

struct FunctorFile {
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
  std::vector<MorId> phi;  // flattened rows
  MorId f0 = kNoMorphism;
};

FunctorFile functor_from_json(const json& j);
json to_json(const MonoidalFunctorData& d);

/// [{"axiom", "status", "witness"}] in axiom order.
json to_json(const AxiomReport& r);
json to_json(const Census& c);
json to_json(const UnitCandidate& u);
json to_json(const Normality& n);
json to_json(const MonoidalReport& r);

}  // namespace skewcheck::io
