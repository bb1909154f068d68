#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "idpl/idspec.hpp"
#include "idpl/presets.hpp"

namespace idpl::spec {
namespace {

using json = nlohmann::json;

// Names that mark a model as an adult-literacy design model.
constexpr std::string_view kRecognized[] = {
    "GoalsPattern", "Bloom",        "ABCD",       "ProcessPattern", "Play",
    "Act",          "Scene",        "Instruction", "ContentPattern", "MerrillModel",
    "GagneModel",   "ContextPattern", "EnvironmentPattern"};

// Everything the mapping consumes; other selected features become lineage tags.
constexpr std::string_view kKnown[] = {
    "IPCL",          "GoalsPattern", "ThreeRs",       "Bloom",          "ABCD",
    "ProcessPattern", "EclecticMethod", "PASI",       "Play",           "Act",
    "Scene",         "Instruction",  "MerrillModel",  "FirstPrinciples", "GagneModel",
    "ContentPattern", "PrimerPages", "FCRMT",         "Fact",           "Case",
    "Rule",          "Model",        "Theory",        "Resources",      "EvaluationPattern",
    "ContextPattern", "EnvironmentPattern"};

bool is_known(std::string_view name) {
  return std::find(std::begin(kKnown), std::end(kKnown), name) != std::end(kKnown);
}

template <typename Enum, std::size_t N>
Enum parse_enum(const json& v, const char* field, const Enum (&values)[N]) {
  if (!v.is_string()) throw Error("SPEC_FORMAT", std::string("'") + field + "' must be a string");
  const auto s = v.get<std::string>();
  for (Enum e : values) {
    if (to_string(e) == s) return e;
  }
  throw Error("SPEC_FORMAT", std::string("unknown ") + field + " '" + s + "'");
}

json bounds_json(const Bounds& b) { return json{{"max", b.max}, {"min", b.min}}; }

Bounds bounds_from(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_object() || !doc[key].contains("min") ||
      !doc[key].contains("max") || !doc[key]["min"].is_number_integer() ||
      !doc[key]["max"].is_number_integer()) {
    throw Error("SPEC_FORMAT", std::string("process_bounds.") + key + " needs integer min and max");
  }
  return Bounds{doc[key]["min"].get<int>(), doc[key]["max"].get<int>()};
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error("SPEC_FORMAT", std::string("missing field '") + key + "'");
  return doc[key];
}

Bounds bounds_of(const fm::ModelIndex& index, std::string_view feature) {
  const auto node = index.find(feature);
  if (!node) return Bounds{1, kMaxProcessUnits};
  const auto& c = index.at(*node).feature->cardinality;
  return Bounds{std::clamp(c.min, 1, kMaxProcessUnits), std::clamp(c.max, 1, kMaxProcessUnits)};
}

}  // namespace

bool IdSpecification::has_section(OptionalSection s) const {
  return std::find(optional_sections.begin(), optional_sections.end(), s) !=
         optional_sections.end();
}

std::string_view to_string(GoalTechnique v) {
  switch (v) {
    case GoalTechnique::Plain3Rs: return "Plain3Rs";
    case GoalTechnique::BloomRevised: return "BloomRevised";
    case GoalTechnique::ABCD: return "ABCD";
  }
  return "?";
}

std::string_view to_string(ProcessModel v) {
  switch (v) {
    case ProcessModel::PASI: return "PASI";
    case ProcessModel::PASI_Merrill: return "PASI_Merrill";
    case ProcessModel::GagneNine: return "GagneNine";
    case ProcessModel::EclecticGeneric: return "EclecticGeneric";
  }
  return "?";
}

std::string_view to_string(ContentScheme v) {
  switch (v) {
    case ContentScheme::PrimerPages: return "PrimerPages";
    case ContentScheme::FCRMT: return "FCRMT";
    case ContentScheme::PlainResources: return "PlainResources";
  }
  return "?";
}

std::string_view to_string(OptionalSection v) {
  return v == OptionalSection::context ? "context" : "environment";
}

Diagnostics check_specification(const IdSpecification& spec) {
  Diagnostics d;
  if (spec.name.empty()) d.push_back(make_error("SPEC_NAME_EMPTY", "specification name is empty"));
  if (std::find(spec.base.begin(), spec.base.end(), "IPCL") == spec.base.end()) {
    d.push_back(make_error("SPEC_BASE", "base lineage must include IPCL"));
  }
  if (spec.process_model == ProcessModel::PASI_Merrill &&
      spec.content_scheme != ContentScheme::FCRMT) {
    d.push_back(make_error("SPEC_MERRILL_CONTENT", "PASI_Merrill requires the FCRMT content scheme"));
  }
  const std::pair<const char*, Bounds> bounds[] = {{"play", spec.process_bounds.play},
                                                   {"act", spec.process_bounds.act},
                                                   {"scene", spec.process_bounds.scene},
                                                   {"instruction", spec.process_bounds.instruction}};
  for (const auto& [unit, b] : bounds) {
    if (b.min < 1 || b.max > kMaxProcessUnits || b.min > b.max) {
      d.push_back(make_error("SPEC_PROCESS_BOUNDS",
                             std::string(unit) + " bounds [" + std::to_string(b.min) + ".." +
                                 std::to_string(b.max) + "] must lie within [1..25]"));
    }
  }
  return d;
}

std::string to_json(const IdSpecification& spec) {
  json sections = json::array();
  for (auto s : spec.optional_sections) sections.push_back(std::string(to_string(s)));
  json doc{{"base", spec.base},
           {"content_scheme", std::string(to_string(spec.content_scheme))},
           {"evaluation_required", spec.evaluation_required},
           {"goal_technique", std::string(to_string(spec.goal_technique))},
           {"name", spec.name},
           {"optional_sections", sections},
           {"process_bounds",
            {{"act", bounds_json(spec.process_bounds.act)},
             {"instruction", bounds_json(spec.process_bounds.instruction)},
             {"play", bounds_json(spec.process_bounds.play)},
             {"scene", bounds_json(spec.process_bounds.scene)}}},
           {"process_model", std::string(to_string(spec.process_model))}};
  return doc.dump(2) + "\n";
}

IdSpecification specification_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error("SPEC_FORMAT", std::string("specification is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("SPEC_FORMAT", "specification must be a JSON object");

  IdSpecification s;
  const auto& name = require(doc, "name");
  if (!name.is_string()) throw Error("SPEC_FORMAT", "'name' must be a string");
  s.name = name.get<std::string>();

  const auto& base = require(doc, "base");
  if (!base.is_array()) throw Error("SPEC_FORMAT", "'base' must be an array of strings");
  s.base.clear();
  for (const auto& tag : base) {
    if (!tag.is_string()) throw Error("SPEC_FORMAT", "'base' must be an array of strings");
    s.base.push_back(tag.get<std::string>());
  }

  constexpr GoalTechnique goals[] = {GoalTechnique::Plain3Rs, GoalTechnique::BloomRevised,
                                     GoalTechnique::ABCD};
  constexpr ProcessModel processes[] = {ProcessModel::PASI, ProcessModel::PASI_Merrill,
                                        ProcessModel::GagneNine, ProcessModel::EclecticGeneric};
  constexpr ContentScheme contents[] = {ContentScheme::PrimerPages, ContentScheme::FCRMT,
                                        ContentScheme::PlainResources};
  constexpr OptionalSection sections[] = {OptionalSection::context, OptionalSection::environment};

  s.goal_technique = parse_enum(require(doc, "goal_technique"), "goal_technique", goals);
  s.process_model = parse_enum(require(doc, "process_model"), "process_model", processes);
  s.content_scheme = parse_enum(require(doc, "content_scheme"), "content_scheme", contents);

  const auto& eval = require(doc, "evaluation_required");
  if (!eval.is_boolean()) throw Error("SPEC_FORMAT", "'evaluation_required' must be a boolean");
  s.evaluation_required = eval.get<bool>();

  const auto& opt = require(doc, "optional_sections");
  if (!opt.is_array()) throw Error("SPEC_FORMAT", "'optional_sections' must be an array");
  std::set<OptionalSection> uniq;
  for (const auto& v : opt) uniq.insert(parse_enum(v, "optional_sections", sections));
  s.optional_sections.assign(uniq.begin(), uniq.end());

  const auto& pb = require(doc, "process_bounds");
  if (!pb.is_object()) throw Error("SPEC_FORMAT", "'process_bounds' must be an object");
  s.process_bounds = ProcessBounds{bounds_from(pb, "play"), bounds_from(pb, "act"),
                                   bounds_from(pb, "scene"), bounds_from(pb, "instruction")};

  if (auto d = check_specification(s); has_errors(d)) {
    throw Error("SPEC_INVALID", format(d.front()), d);
  }
  return s;
}

IdSpecification derive_specification(const fm::FeatureModel& model, const fm::Configuration& config) {
  const fm::ModelIndex index(model);
  const bool recognized = std::any_of(std::begin(kRecognized), std::end(kRecognized),
                                      [&](std::string_view n) { return index.find(n).has_value(); });
  if (!recognized) {
    throw Error("MODEL_NOT_RECOGNIZED",
                "model '" + model.name + "' uses none of the instructional-design feature names");
  }
  auto report = fm::check_configuration(model, config);
  if (!report.valid) {
    throw Error("INVALID_CONFIG", "configuration is not valid for model '" + model.name + "'",
                std::move(report.diagnostics));
  }

  auto sel = [&](std::string_view n) { return config.selected(std::string(n)); };

  IdSpecification s;
  s.name = model.name;

  if (sel("Bloom")) {
    s.goal_technique = GoalTechnique::BloomRevised;
  } else if (sel("ABCD")) {
    s.goal_technique = GoalTechnique::ABCD;
  } else {
    s.goal_technique = GoalTechnique::Plain3Rs;
  }

  if (sel("MerrillModel")) {
    s.process_model = ProcessModel::PASI_Merrill;
  } else if (sel("PASI") || sel("Play")) {
    s.process_model = ProcessModel::PASI;
  } else if (sel("GagneModel")) {
    s.process_model = ProcessModel::GagneNine;
  } else {
    s.process_model = ProcessModel::EclecticGeneric;
  }

  if (sel("FCRMT")) {
    s.content_scheme = ContentScheme::FCRMT;
  } else if (sel("PrimerPages")) {
    s.content_scheme = ContentScheme::PrimerPages;
  } else if (sel("Resources")) {
    s.content_scheme = ContentScheme::PlainResources;
  } else {
    s.content_scheme = s.process_model == ProcessModel::PASI_Merrill ? ContentScheme::FCRMT
                                                                     : ContentScheme::PlainResources;
  }

  s.evaluation_required = sel("EvaluationPattern");
  if (sel("ContextPattern")) s.optional_sections.push_back(OptionalSection::context);
  if (sel("EnvironmentPattern")) s.optional_sections.push_back(OptionalSection::environment);

  s.process_bounds = ProcessBounds{bounds_of(index, "Play"), bounds_of(index, "Act"),
                                   bounds_of(index, "Scene"), bounds_of(index, "Instruction")};

  const auto& nodes = index.nodes();
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& name = nodes[i].feature->name;
    if (config.selected(name) && !is_known(name)) s.base.push_back(name);
  }

  if (auto d = check_specification(s); has_errors(d)) {
    throw Error("INVALID_CONFIG", "selection maps to an inconsistent specification: " +
                                      format(d.front()),
                d);
  }
  return s;
}

std::vector<IdSpecification> preset_specifications() {
  auto make = [](std::string name, GoalTechnique g, ProcessModel p, ContentScheme c) {
    IdSpecification s;
    s.name = std::move(name);
    s.goal_technique = g;
    s.process_model = p;
    s.content_scheme = c;
    return s;
  };
  return {
      make("IDSpec1", GoalTechnique::Plain3Rs, ProcessModel::EclecticGeneric, ContentScheme::PrimerPages),
      make("IDSpec2", GoalTechnique::Plain3Rs, ProcessModel::PASI, ContentScheme::FCRMT),
      make("IDSpec3", GoalTechnique::BloomRevised, ProcessModel::PASI_Merrill, ContentScheme::FCRMT),
      make("IDSpec4", GoalTechnique::ABCD, ProcessModel::GagneNine, ContentScheme::PlainResources),
  };
}

IdSpecification preset_specification(int number) {
  if (number < 1 || number > 4) {
    throw Error("INVALID_ARGUMENT", "preset number must be 1..4, got " + std::to_string(number));
  }
  return preset_specifications()[static_cast<std::size_t>(number - 1)];
}

fm::Configuration preset_configuration(int number) {
  if (number < 1 || number > 4) {
    throw Error("INVALID_ARGUMENT", "preset number must be 1..4, got " + std::to_string(number));
  }
  fm::Configuration c;
  c.model = "AdultLiteracyID";
  for (const char* f : {"InstructionalDesign", "IPCL", "GoalsPattern", "ProcessPattern",
                        "ContentPattern", "EvaluationPattern"}) {
    c.selections[f] = 1;
  }
  auto select = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) c.selections[n] = 1;
  };
  switch (number) {
    case 1:
      select({"ThreeRs", "EclecticMethod", "PrimerPages"});
      break;
    case 2:
      select({"ThreeRs", "PASI", "Play", "Act", "Scene", "Instruction", "FCRMT", "Fact", "Case"});
      break;
    case 3:
      select({"Bloom", "PASI", "Play", "Act", "Scene", "Instruction", "MerrillModel",
              "FirstPrinciples", "FCRMT", "Fact", "Case"});
      break;
    default:
      select({"ABCD", "GagneModel", "Resources"});
      break;
  }
  return c;
}

}  // namespace idpl::spec
