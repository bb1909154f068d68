#include "idpl/pedagogy.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "idpl/diagnostic.hpp"

namespace idpl {

const PedagogyCatalog& default_catalog() {
  static const PedagogyCatalog catalog{
      {"remember", "understand", "apply", "analyze", "evaluate", "create"},
      {"gain_attention", "inform_objectives", "stimulate_recall", "present_content",
       "provide_guidance", "elicit_performance", "provide_feedback", "assess_performance",
       "enhance_retention"},
      {"task_centered", "activation", "demonstration", "application", "integration"},
  };
  return catalog;
}

PedagogyCatalog catalog_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("CATALOG_FORMAT", std::string("catalog is not valid JSON: ") + e.what());
  }
  auto list = [&](const char* key, std::size_t min_size) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
      throw Error("CATALOG_FORMAT", std::string("catalog needs an array '") + key + "'");
    }
    std::vector<std::string> out;
    for (const auto& v : doc[key]) {
      if (!v.is_string() || v.get<std::string>().empty()) {
        throw Error("CATALOG_FORMAT", std::string("'") + key + "' must hold non-empty strings");
      }
      out.push_back(v.get<std::string>());
    }
    if (out.size() < min_size) {
      throw Error("CATALOG_FORMAT", std::string("'") + key + "' needs at least " +
                                        std::to_string(min_size) + " entries");
    }
    return out;
  };
  PedagogyCatalog c;
  c.bloom_levels = list("bloom_levels", 2);
  c.gagne_events = list("gagne_events", 2);
  c.merrill_principles = list("merrill_principles", 2);
  return c;
}

std::string catalog_to_json(const PedagogyCatalog& catalog) {
  nlohmann::json doc{{"bloom_levels", catalog.bloom_levels},
                     {"gagne_events", catalog.gagne_events},
                     {"merrill_principles", catalog.merrill_principles}};
  return doc.dump(2) + "\n";
}

bool contains(const std::vector<std::string>& list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

}  // namespace idpl
