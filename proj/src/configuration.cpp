#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "idpl/featmodel.hpp"

namespace idpl::fm {
namespace {

using json = nlohmann::json;

std::string card_text(const Cardinality& c) {
  return "[" + std::to_string(c.min) + ".." + std::to_string(c.max) + "]";
}

std::string value_text(const AttributeValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return "'" + *s + "'";
  return std::to_string(std::get<std::int64_t>(v));
}

bool in_domain(const AttributeDomain& domain, const AttributeValue& value) {
  if (const auto* e = std::get_if<EnumDomain>(&domain)) {
    const auto* s = std::get_if<std::string>(&value);
    if (!s) return false;
    for (const auto& lit : e->literals) {
      if (lit == *s) return true;
    }
    return false;
  }
  if (const auto* r = std::get_if<IntRangeDomain>(&domain)) {
    const auto* i = std::get_if<std::int64_t>(&value);
    return i && *i >= r->lo && *i <= r->hi;
  }
  return std::holds_alternative<std::string>(value);
}

const AttributeDecl* find_attribute(const Feature& f, const std::string& name) {
  for (const auto& a : f.attributes) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

}  // namespace

ValidityReport check_configuration(const FeatureModel& model, const Configuration& config,
                                   CheckOptions options) {
  ValidityReport report;
  auto& diags = report.diagnostics;
  const ModelIndex index(model);

  if (config.model != model.name) {
    diags.push_back(make_error("MODEL_MISMATCH", "configuration targets model '" + config.model +
                                                     "' but the model is '" + model.name + "'"));
  }

  for (const auto& [name, count] : config.selections) {
    if (!index.find(name)) {
      diags.push_back(make_error("UNKNOWN_FEATURE", "selected feature '" + name +
                                                        "' does not exist in model '" +
                                                        model.name + "'"));
    }
    if (count < 0) {
      diags.push_back(make_error("INVALID_COUNT",
                                 "feature '" + name + "' has negative count " +
                                     std::to_string(count)));
    }
  }

  auto count_of = [&](int node) { return std::max(0, config.count_of(index.at(node).feature->name)); };

  // Children of each node, grouped, in declaration order.
  const auto& nodes = index.nodes();
  std::vector<std::vector<std::vector<int>>> groups(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    groups[i].resize(nodes[i].feature->groups.size());
    if (nodes[i].parent >= 0) {
      groups[static_cast<std::size_t>(nodes[i].parent)][static_cast<std::size_t>(nodes[i].group)]
          .push_back(static_cast<int>(i));
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    const Feature& f = *n.feature;
    const int count = count_of(static_cast<int>(i));
    const bool selected = count > 0;

    if (n.parent < 0 && !selected) {
      diags.push_back(make_error("R1_ROOT_NOT_SELECTED", "root feature '" + f.name + "' is not selected",
                                 n.path));
    }
    if (n.parent >= 0 && selected && count_of(n.parent) == 0) {
      diags.push_back(make_error("R2_PARENT_NOT_SELECTED",
                                 "feature '" + f.name + "' is selected but its parent '" +
                                     index.at(n.parent).feature->name + "' is not",
                                 n.path));
    }
    if (!selected) continue;

    if (count < f.cardinality.min || count > f.cardinality.max) {
      diags.push_back(make_error("R6_CARDINALITY",
                                 "feature '" + f.name + "' has count " + std::to_string(count) +
                                     " outside " + card_text(f.cardinality),
                                 n.path));
    }

    for (std::size_t g = 0; g < f.groups.size(); ++g) {
      const auto& members = groups[i][g];
      int chosen = 0;
      for (int m : members) chosen += count_of(m) > 0 ? 1 : 0;
      switch (f.groups[g].kind) {
        case GroupKind::and_:
          for (int m : members) {
            if (index.is_mandatory(m) && count_of(m) == 0) {
              diags.push_back(make_error("R3_MANDATORY_MISSING",
                                         "mandatory feature '" + index.at(m).feature->name +
                                             "' is not selected under '" + f.name + "'",
                                         index.at(m).path));
            }
          }
          break;
        case GroupKind::alternative:
          if (chosen != 1) {
            std::string names;
            for (int m : members) {
              if (count_of(m) > 0) names += (names.empty() ? "" : ", ") + index.at(m).feature->name;
            }
            diags.push_back(make_error("R4_ALTERNATIVE",
                                       "alternative group under '" + f.name + "' needs exactly one "
                                       "selected member, found " + std::to_string(chosen) +
                                           (names.empty() ? "" : " (" + names + ")"),
                                       n.path));
          }
          break;
        case GroupKind::or_:
          if (chosen == 0) {
            diags.push_back(make_error("R5_OR_EMPTY",
                                       "or group under '" + f.name + "' needs at least one selected member",
                                       n.path));
          }
          break;
      }
    }
  }

  for (const auto& c : model.constraints) {
    const bool lhs = config.count_of(c.lhs) > 0;
    const bool rhs = config.count_of(c.rhs) > 0;
    const auto lhs_node = index.find(c.lhs);
    const std::string path = lhs_node ? index.at(*lhs_node).path : c.lhs;
    if (c.kind == ConstraintKind::requires_ && lhs && !rhs) {
      diags.push_back(make_error("R7_REQUIRES", "'" + c.lhs + "' requires '" + c.rhs + "'", path));
    } else if (c.kind == ConstraintKind::excludes && lhs && rhs) {
      diags.push_back(make_error("R7_EXCLUDES", "'" + c.lhs + "' excludes '" + c.rhs + "'", path));
    }
  }

  if (options.check_attributes) {
    std::set<std::tuple<std::string, int, std::string>> assigned;
    for (const auto& a : config.attributes) {
      const auto node = index.find(a.feature);
      if (!node) {
        diags.push_back(make_error("UNKNOWN_FEATURE", "attribute assignment names unknown feature '" +
                                                          a.feature + "'"));
        continue;
      }
      const auto& n = index.at(*node);
      const AttributeDecl* decl = find_attribute(*n.feature, a.name);
      if (!decl) {
        diags.push_back(make_error("UNKNOWN_ATTRIBUTE", "feature '" + a.feature +
                                                            "' has no attribute '" + a.name + "'",
                                   n.path));
        continue;
      }
      const int count = count_of(*node);
      if (a.instance < 1 || a.instance > count) {
        diags.push_back(make_error("R8_INSTANCE_RANGE",
                                   "attribute '" + a.name + "' assigned to instance " +
                                       std::to_string(a.instance) + " of '" + a.feature +
                                       "' which has count " + std::to_string(count),
                                   n.path));
        continue;
      }
      if (!assigned.emplace(a.feature, a.instance, a.name).second) {
        diags.push_back(make_error("R8_ATTRIBUTE_DUPLICATE",
                                   "attribute '" + a.name + "' assigned twice on instance " +
                                       std::to_string(a.instance) + " of '" + a.feature + "'",
                                   n.path));
        continue;
      }
      if (!in_domain(decl->domain, a.value)) {
        diags.push_back(make_error("R8_ATTRIBUTE_DOMAIN",
                                   "value " + value_text(a.value) + " is outside the domain of '" +
                                       a.feature + "." + a.name + "'",
                                   n.path));
      }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const int count = count_of(static_cast<int>(i));
      for (const auto& decl : nodes[i].feature->attributes) {
        if (!decl.required) continue;
        for (int inst = 1; inst <= count; ++inst) {
          if (!assigned.count({nodes[i].feature->name, inst, decl.name})) {
            diags.push_back(make_error("R8_ATTRIBUTE_MISSING",
                                       "required attribute '" + decl.name + "' missing on instance " +
                                           std::to_string(inst) + " of '" +
                                           nodes[i].feature->name + "'",
                                       nodes[i].path));
          }
        }
      }
    }
  }

  report.valid = !has_errors(diags);
  return report;
}

Configuration configuration_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error("CONFIG_FORMAT", std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("CONFIG_FORMAT", "configuration must be a JSON object");

  Configuration c;
  if (!doc.contains("model") || !doc["model"].is_string()) {
    throw Error("CONFIG_FORMAT", "configuration needs a string field 'model'");
  }
  c.model = doc["model"].get<std::string>();

  if (doc.contains("select")) {
    if (!doc["select"].is_object()) throw Error("CONFIG_FORMAT", "'select' must be an object");
    for (const auto& [name, count] : doc["select"].items()) {
      if (count.is_boolean()) {
        if (count.get<bool>()) c.selections[name] = 1;
      } else if (count.is_number_integer()) {
        const auto v = count.get<std::int64_t>();
        if (v < INT32_MIN || v > INT32_MAX) {
          throw Error("CONFIG_FORMAT", "count for '" + name + "' out of range");
        }
        if (v != 0) c.selections[name] = static_cast<int>(v);
      } else {
        throw Error("CONFIG_FORMAT", "count for '" + name + "' must be an integer");
      }
    }
  }

  if (doc.contains("attrs")) {
    if (!doc["attrs"].is_array()) throw Error("CONFIG_FORMAT", "'attrs' must be an array");
    for (const auto& entry : doc["attrs"]) {
      if (!entry.is_object() || !entry.contains("feature") || !entry.contains("name") ||
          !entry.contains("value") || !entry["feature"].is_string() || !entry["name"].is_string()) {
        throw Error("CONFIG_FORMAT", "each attribute needs string 'feature', 'name' and a 'value'");
      }
      AttributeAssignment a;
      a.feature = entry["feature"].get<std::string>();
      a.name = entry["name"].get<std::string>();
      if (entry.contains("instance")) {
        if (!entry["instance"].is_number_integer()) {
          throw Error("CONFIG_FORMAT", "'instance' must be an integer");
        }
        a.instance = entry["instance"].get<int>();
      }
      const auto& v = entry["value"];
      if (v.is_string()) {
        a.value = v.get<std::string>();
      } else if (v.is_number_integer()) {
        a.value = v.get<std::int64_t>();
      } else {
        throw Error("CONFIG_FORMAT", "attribute value must be a string or an integer");
      }
      c.attributes.push_back(std::move(a));
    }
  }
  return c;
}

std::string configuration_to_json(const Configuration& config) {
  json doc;
  doc["model"] = config.model;
  doc["select"] = json::object();
  for (const auto& [name, count] : config.selections) doc["select"][name] = count;
  doc["attrs"] = json::array();
  for (const auto& a : config.attributes) {
    json entry{{"feature", a.feature}, {"instance", a.instance}, {"name", a.name}};
    std::visit([&](const auto& v) { entry["value"] = v; }, a.value);
    doc["attrs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace idpl::fm
