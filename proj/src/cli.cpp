#include "skewcheck/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewcheck/fixtures.hpp"
#include "skewcheck/units.hpp"

namespace skewcheck::cli {

namespace {

using io::json;

struct Outcome {
  json doc;
  std::string text;
  int code = kOk;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string summary(const AxiomReport& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.enabled()) + " axioms";
}

void axiom_lines(std::ostringstream& os, const AxiomReport& r,
                 const std::array<std::string, 5>& witness_text) {
  for (Axiom a : kAxioms) {
    os << std::left << std::setw(10) << axiom_name(a) << to_string(r[a].status);
    if (r[a].status == Status::Fail) os << "  at " << witness_text[static_cast<std::size_t>(a)];
    os << '\n';
  }
}

std::string normality_text(const Normality& n) {
  if (!n.weakly_normal) return "not weakly normal";
  if (n.normal) return "normal";
  std::string out = "weakly normal";
  if (n.left_normal) out += ", left normal";
  if (n.right_normal) out += ", right normal";
  return out;
}

bool has_unit_axioms(AxiomMask mask) {
  return mask.has(Axiom::LeftUnit) && mask.has(Axiom::MidUnit) && mask.has(Axiom::RightUnit) &&
         mask.has(Axiom::UnitUnit);
}

Outcome check_structure(const io::StructureFile& f, AxiomMask mask, std::uint64_t budget) {
  const TensorStructure& s = f.tensor;
  const FinCategory& c = s.base();
  std::vector<UnitCandidate> units;
  if (s.total()) {
    units = enumerate_units(s, {mask, budget});
  } else if (f.unit && check_all(s, *f.unit, mask).all_pass()) {
    units = {*f.unit};
  }
  const UnitCandidate* target = f.unit ? &*f.unit : units.empty() ? nullptr : &units.front();

  AxiomReport r;
  std::array<std::string, 5> witness_text;
  if (target != nullptr) {
    r = check_all(s, *target, mask);
  } else {
    if (mask.has(Axiom::Pentagon)) r[Axiom::Pentagon] = check_pentagon(s);
    for (Axiom a : kAxioms) {
      if (a != Axiom::Pentagon && mask.has(a)) {
        r[a] = AxiomStatus::fail({});
        witness_text[static_cast<std::size_t>(a)] = "no unit";
      }
    }
  }
  for (Axiom a : kAxioms) {
    if (!r[a].witness.empty()) witness_text[static_cast<std::size_t>(a)] = "(" + join(r[a].witness) + ")";
  }

  Outcome o;
  std::ostringstream os;
  os << "structure: " << plural(static_cast<std::size_t>(c.object_count()), "object") << ", "
     << plural(static_cast<std::size_t>(c.morphism_count()), "morphism") << ", "
     << (s.total() ? "total" : "partial") << (s.degenerate() ? " degenerate" : "") << " tensor\n";
  if (target != nullptr) os << "checked unit: I = " << target->unit << '\n';
  axiom_lines(os, r, witness_text);

  const bool classify_units = has_unit_axioms(mask);
  json ju = json::array();
  os << "units: " << units.size() << '\n';
  for (std::size_t i = 0; i < units.size(); ++i) {
    const UnitCandidate& u = units[i];
    json e = io::to_json(u);
    os << "  u" << i << ": I = " << u.unit << ", lambda = [" << join(u.lambda.components())
       << "], rho = [" << join(u.rho.components()) << "]";
    if (classify_units && s.tensor(u.unit, u.unit) != kNoObject) {
      const Normality n = normality_class(s, u);
      e["normality"] = io::to_json(n);
      os << ", " << normality_text(n);
    }
    os << '\n';
    ju.push_back(std::move(e));
  }
  o.doc["units"] = std::move(ju);
  if (classify_units && !units.empty()) {
    const UnitsCategory uc = units_category_of(s, units);
    json matrix = json::array();
    os << "unit morphisms:\n" << std::left << std::setw(6) << "";
    for (std::size_t j = 0; j < units.size(); ++j) os << std::setw(6) << ("u" + std::to_string(j));
    os << '\n';
    for (std::size_t i = 0; i < units.size(); ++i) {
      json row = json::array();
      os << "  " << std::setw(4) << ("u" + std::to_string(i));
      for (std::size_t j = 0; j < units.size(); ++j) {
        row.push_back(uc.hom(i, j));
        os << std::setw(6) << ("#" + join(uc.hom(i, j)));
      }
      os << '\n';
      matrix.push_back(std::move(row));
    }
    o.doc["unit_morphisms"] = std::move(matrix);
  }
  const std::string line = summary(r) + ", " + plural(units.size(), "unit");
  os << line << '\n';

  o.doc["input"] = "structure";
  o.doc["objects"] = c.object_count();
  o.doc["morphisms"] = c.morphism_count();
  o.doc["total"] = s.total();
  o.doc["degenerate"] = s.degenerate();
  o.doc["checked_unit"] = target != nullptr ? json(target->unit) : json(nullptr);
  o.doc["axioms"] = io::to_json(r);
  o.doc["summary"] = line;
  o.text = os.str();
  o.code = r.all_pass() ? kOk : kCheckFailed;
  return o;
}

std::string model_witness(const PointwiseModel& m, Axiom a, const std::vector<int>& w) {
  // Leading coordinates that live in M for each diagram's domain.
  static constexpr std::array<std::size_t, 5> kMagmaCoords = {3, 2, 1, 1, 0};
  const std::size_t k = std::min(kMagmaCoords[static_cast<std::size_t>(a)], w.size());
  std::string out = "(";
  for (std::size_t i = 0; i < k; ++i) out += (i ? ", " : "") + element_name(m.magma, w[i]);
  if (k > 0 && k < w.size()) out += " | ";
  out += join(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  return out + ")";
}

std::string magma_box(const Magma& m) {
  std::ostringstream os;
  os << ". |";
  for (int y = 0; y < m.size; ++y) os << ' ' << element_name(m, y);
  os << "\n--+" << std::string(static_cast<std::size_t>(2 * m.size), '-') << '\n';
  for (int x = 0; x < m.size; ++x) {
    os << element_name(m, x) << " |";
    for (int y = 0; y < m.size; ++y) os << ' ' << element_name(m, m.op(x, y));
    os << '\n';
  }
  return os.str();
}

Outcome check_model(const PointwiseModel& m, AxiomMask mask) {
  const ModelEvaluation e = evaluate_model(m);
  AxiomReport r;
  std::array<std::string, 5> witness_text;
  json axioms = json::array();
  for (Axiom a : kAxioms) {
    const auto& w = e.witnesses[static_cast<std::size_t>(a)];
    if (mask.has(a)) r[a] = e.signature[a] ? AxiomStatus::pass() : AxiomStatus::fail(w);
    witness_text[static_cast<std::size_t>(a)] = model_witness(m, a, w);
    json entry = {{"axiom", axiom_name(a)}, {"status", to_string(r[a].status)}, {"witness", r[a].witness}};
    if (r[a].status == Status::Fail) entry["witness_named"] = witness_text[static_cast<std::size_t>(a)];
    axioms.push_back(std::move(entry));
  }

  std::ostringstream os;
  std::string sizes;
  for (int s : m.test_sizes) sizes += (sizes.empty() ? "" : ", ") + std::to_string(s);
  if (m.kind == ModelKind::CartesianUnitUnit) {
    os << "model: cartesian product, I = {a, b}, test sizes {" << sizes << "}\n";
  } else {
    os << "model: X⊗Y = M×X×Y, |M| = " << m.magma.size << ", test sizes {" << sizes << "}\n"
       << magma_box(m.magma);
  }
  axiom_lines(os, r, witness_text);
  const std::string sig = e.signature.to_string();
  const std::string dual = dual_signature(e.signature).to_string();
  os << "signature " << sig << ", dual " << dual << '\n';
  const std::string line = summary(r);
  os << line << '\n';

  Outcome o;
  o.doc["input"] = "model";
  o.doc["model"] = io::to_json(m);
  o.doc["axioms"] = std::move(axioms);
  o.doc["signature"] = sig;
  o.doc["dual_signature"] = dual;
  o.doc["summary"] = line;
  o.text = os.str();
  o.code = r.all_pass() ? kOk : kCheckFailed;
  return o;
}

json resolve_document(const std::string& builtin, const std::string& path) {
  if (!builtin.empty()) {
    auto doc = builtin_document(builtin);
    if (!doc) throw Error(ErrorKind::ParseError, "unknown builtin '" + builtin + "'");
    return *doc;
  }
  return io::load_file(path);
}

Outcome cmd_check(const std::string& in, const std::string& builtin, const std::string& mask_text,
                  int sizes) {
  if (in.empty() == builtin.empty()) {
    throw Error(ErrorKind::ParseError, "check needs exactly one of --in and --builtin");
  }
  const AxiomMask mask = mask_text.empty() ? AxiomMask::all() : AxiomMask::parse(mask_text);
  const json doc = resolve_document(builtin, in);
  if (io::is_model_document(doc)) {
    PointwiseModel m = io::model_from_json(doc);
    if (sizes > 0) {
      m.test_sizes.clear();
      for (int k = 1; k <= sizes; ++k) m.test_sizes.push_back(k);
    }
    return check_model(m, mask);
  }
  if (sizes > 0) throw Error(ErrorKind::ParseError, "--sizes applies to set models only");
  return check_structure(io::structure_from_json(doc), mask, budget_from_env());
}

Outcome cmd_census(int max_size) {
  const Census c = census(max_size, budget_from_env());
  std::ostringstream os;
  os << "magmas of size 2.." << max_size << " with a designated element: " << c.total << '\n';
  os << "signature  count\n";
  for (const auto& e : c.entries) {
    os << std::left << std::setw(11) << e.signature.to_string() << e.count << '\n';
  }
  for (const auto& e : c.entries) {
    os << '\n' << e.signature.to_string() << " (" << plural(e.count, "table") << ")\n"
       << magma_box(e.witness);
  }
  Outcome o;
  o.doc = io::to_json(c);
  o.text = os.str();
  return o;
}

std::shared_ptr<const SkewMonoidal> load_skew(const std::string& where, std::uint64_t budget) {
  const json doc = builtin_document(where).value_or(json());
  const json j = doc.is_null() ? io::load_file(where) : doc;
  if (io::is_model_document(j)) {
    throw Error(ErrorKind::ParseError, where + ": expected a structure, got a set model");
  }
  io::StructureFile f = io::structure_from_json(j);
  if (!f.unit) {
    if (!f.tensor.total()) throw Error(ErrorKind::ParseError, where + ": structure has no unit");
    auto units = enumerate_units(f.tensor, {AxiomMask::all(), budget});
    if (units.empty()) throw Error(ErrorKind::ParseError, where + ": structure has no unit");
    f.unit = units.front();
  }
  return fixtures::share({std::move(f.tensor), std::move(*f.unit)});
}

std::string mor_list(const std::vector<MorId>& v) {
  std::string out;
  for (MorId f : v) out += (out.empty() ? "#" : ", #") + std::to_string(f);
  return out;
}

Outcome cmd_functor(const std::string& src, const std::string& dst, const std::string& map) {
  const std::uint64_t budget = budget_from_env();
  auto source = load_skew(src, budget);
  auto target = load_skew(dst, budget);
  const io::FunctorFile ff = io::functor_from_json(io::load_file(map));
  FinFunctor F = FinFunctor::make(source->tensor.base_ptr(), target->tensor.base_ptr(), ff.obj_map,
                                  ff.mor_map);
  MonoidalFunctorData d = MonoidalFunctorData::make(source, target, std::move(F), ff.phi, ff.f0);

  Outcome o;
  std::ostringstream os;
  const MonoidalReport report = check_monoidal_functor(d);
  o.doc["report"] = io::to_json(report);
  os << "hexagon   " << (report.assoc_ok ? "pass" : "fail");
  if (!report.assoc_ok) os << "  at (" << join(report.assoc_witness) << ")";
  os << '\n';
  if (d.f0 != kNoMorphism) {
    os << "unit (F0 = #" << d.f0 << ")  " << (report.unit_ok ? "pass" : "fail");
    if (!report.unit_ok) os << "  at (" << join(report.unit_witness) << ")";
    os << '\n';
  }
  o.code = kCheckFailed;
  if (!report.assoc_ok) {
    os << "not monoidal\n";
    o.doc["summary"] = "not monoidal";
    o.text = os.str();
    return o;
  }
  const std::vector<MorId> candidates = enumerate_unit_maps(d);
  o.doc["f0_candidates"] = candidates;
  std::string line;
  if (candidates.empty()) {
    line = "F0 candidates: 0 (no unit map exists)";
  } else {
    if (d.f0 == kNoMorphism) d.f0 = candidates.front();
    if (d.f0 != candidates.front()) {
      line = "F0 #" + std::to_string(d.f0) + " fails, F0 candidates: 1 (" + mor_list(candidates) + ")";
    } else {
      const Classification cl = classify(d);
      const std::string kind = cl.strong ? "strong" : cl.normal ? "normal" : "lax";
      o.doc["classification"] = {{"lax", cl.lax}, {"normal", cl.normal}, {"strong", cl.strong}};
      if (cl.normal) o.doc["transported_unit_agreement"] = transported_unit_agreement(d);
      line = kind + ", F0 candidates: 1";
      o.code = kOk;
    }
  }
  os << line << '\n';
  o.doc["summary"] = line;
  o.text = os.str();
  return o;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SearchBudgetExceeded: return kBudget;
    case ErrorKind::PropositionViolated: return kViolated;
    default: return kInputError;
  }
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"paper-left", "paper-mid", "paper-right", "paper-unitunit", "terminal", "codisc2", "bz2"};
}

std::optional<json> builtin_document(const std::string& name) {
  for (const auto& nm : builtin_models()) {
    if (nm.name == name) return io::to_json(nm.model);
  }
  if (name == "terminal") {
    const SkewMonoidal s = fixtures::terminal();
    return io::to_json(s.tensor, &s.unit);
  }
  if (name == "codisc2") {
    const TensorStructure s = fixtures::codisc2();
    const UnitCandidate u = fixtures::thin_unit(s, 0);
    return io::to_json(s, &u);
  }
  if (name == "bz2") {
    const UnitCandidate u = fixtures::bz2_unit(false);
    return io::to_json(fixtures::bz2(), &u);
  }
  return std::nullopt;
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("SKEWCHECK_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  const std::string text(raw);
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || v == 0) {
    throw Error(ErrorKind::ParseError, "SKEWCHECK_BUDGET must be a positive integer, got '" + text + "'");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite checker for skew monoidal structures"};
  app.name("skewcheck");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");

  std::string in;
  std::string builtin;
  std::string mask;
  int sizes = 0;
  auto* check = app.add_subcommand("check", "check the axioms of a structure or set model");
  check->add_option("--in", in, "structure or model file");
  check->add_option("--builtin", builtin, "builtin structure or model")
      ->check(CLI::IsMember(builtin_names()));
  check->add_option("--mask", mask, "comma-separated axioms to check");
  check->add_option("--sizes", sizes, "test sets of size 1..k for set models")
      ->check(CLI::Range(1, 4));

  int max_size = 0;
  auto* census_cmd = app.add_subcommand("census", "classify every small magma model");
  census_cmd->add_option("--max-size", max_size, "largest magma size")
      ->required()
      ->check(CLI::Range(1, 1000));

  std::string src;
  std::string dst;
  std::string map;
  auto* functor = app.add_subcommand("functor", "check a monoidal functor");
  functor->add_option("--src", src, "source structure file or builtin")->required();
  functor->add_option("--dst", dst, "target structure file or builtin")->required();
  functor->add_option("--map", map, "functor file")->required();

  std::string export_name;
  auto* exp = app.add_subcommand("export", "write a builtin as a file");
  exp->add_option("--builtin", export_name, "builtin name")
      ->required()
      ->check(CLI::IsMember(builtin_names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (check->parsed()) {
      o = cmd_check(in, builtin, mask, sizes);
    } else if (census_cmd->parsed()) {
      o = cmd_census(max_size);
    } else if (functor->parsed()) {
      o = cmd_functor(src, dst, map);
    } else {
      o.doc = *builtin_document(export_name);
      o.text = o.doc.dump(2) + "\n";
    }
  } catch (const Error& e) {
    o.code = exit_code_for(e);
    o.doc = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    o.text.clear();
    err << "skewcheck: " << e.what() << '\n';
    if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
      for (const auto& viol : v->violations()) {
        err << "  " << to_string(viol.kind) << ": " << viol.message;
        if (!viol.ids.empty()) err << " [" << join(viol.ids) << "]";
        err << '\n';
      }
    }
  }

  std::string payload;
  if (command == "export") {
    payload = o.text;
  } else if (format == "structured") {
    o.doc["schema_version"] = io::kSchemaVersion;
    o.doc["command"] = command;
    o.doc["exit_code"] = o.code;
    payload = o.doc.dump(2) + "\n";
  } else {
    payload = o.text;
  }
  if (out_path.empty()) {
    out << payload;
  } else if (!payload.empty() || format == "structured") {
    std::ofstream file(out_path);
    if (!file || !(file << payload)) {
      err << "skewcheck: cannot write " << out_path << '\n';
      return kInputError;
    }
  }
  return o.code;
}

}  // namespace skewcheck::cli
