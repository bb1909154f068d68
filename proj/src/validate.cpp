#include <array>

#include "idpl/idinstance.hpp"

namespace idpl::inst {
namespace {

using spec::Bounds;
using spec::GoalTechnique;

std::string bounds_text(const Bounds& b) {
  return "[" + std::to_string(b.min) + ".." + std::to_string(b.max) + "]";
}

class Validator {
 public:
  Validator(const IdInstance& instance, const spec::IdSpecification& spec,
            const ValidateOptions& options)
      : instance_(instance),
        spec_(spec),
        options_(options),
        catalog_(options.catalog ? *options.catalog : default_catalog()) {}

  Diagnostics run() {
    if (!instance_.spec.empty() && instance_.spec != spec_.name) {
      diags_.push_back(make_warning("SPEC_NAME_MISMATCH", "instance declares specification '" +
                                                              instance_.spec + "' but is checked against '" +
                                                              spec_.name + "'",
                                    "primer"));
    }
    if (instance_.lessons.empty()) {
      diags_.push_back(make_error("NO_LESSONS", "an instance needs at least one lesson", "primer"));
    }
    for (std::size_t i = 0; i < instance_.lessons.size(); ++i) lesson(i);
    assets();
    return std::move(diags_);
  }

 private:
  void error(std::string code, std::string msg, std::string path) {
    diags_.push_back(make_error(std::move(code), std::move(msg), std::move(path)));
  }

  void warning(std::string code, std::string msg, std::string path) {
    diags_.push_back(make_warning(std::move(code), std::move(msg), std::move(path)));
  }

  void lesson(std::size_t li) {
    const Lesson& l = instance_.lessons[li];
    const std::string path = "lesson[" + std::to_string(li) + "]";
    if (l.title.empty()) error("LESSON_TITLE_EMPTY", "lesson title is empty", path);

    if (l.goals.empty()) {
      error("GOALS_MISSING", "lesson '" + l.title + "' has no goals", path);
    }
    for (std::size_t gi = 0; gi < l.goals.size(); ++gi) goal(l.goals[gi], path + "/goal[" + std::to_string(gi) + "]");

    if (spec_.uses_pasi()) {
      if (l.process.empty()) {
        warning("PROCESS_ABSENT", "lesson '" + l.title + "' has no play/act/scene/instruction tree",
                path);
      } else {
        process_level(l.process, 0, path);
      }
    } else if (!l.process.empty()) {
      warning("PROCESS_NOT_IN_SPEC",
              "process tree ignored: specification uses " + std::string(to_string(spec_.process_model)),
              path);
    }

    const auto taught = taught_facts_through(instance_, li);
    std::size_t fi = 0;
    std::size_t ri = 0;
    for (const auto& item : l.content) {
      if (const auto* f = std::get_if<Fact>(&item)) {
        const std::string fpath = path + "/fact[" + std::to_string(fi++) + "]";
        if (f->text.empty()) error("FACT_TEXT_EMPTY", "fact text is empty", fpath);
        for (std::size_t ci = 0; ci < f->cases.size(); ++ci) {
          const Case& c = f->cases[ci];
          const std::string cpath = fpath + "/case[" + std::to_string(ci) + "]";
          if (c.text.empty()) {
            error("CASE_TEXT_EMPTY", "case text is empty", cpath);
            continue;
          }
          if (!decompose_word(c.text, taught)) {
            error("KNOWN_TO_UNKNOWN",
                  "word '" + c.text + "' in lesson '" + l.title +
                      "' cannot be built from facts taught so far",
                  cpath);
          }
        }
      } else {
        const auto& r = std::get<Resource>(item);
        const std::string rpath =
            path + "/" + std::string(to_string(r.kind)) + "[" + std::to_string(ri++) + "]";
        if (r.text.empty()) error("RESOURCE_TEXT_EMPTY", "resource text is empty", rpath);
      }
    }
  }

  void goal(const Goal& g, const std::string& path) {
    if (g.text.empty()) error("GOAL_TEXT_EMPTY", "goal text is empty", path);
    switch (spec_.goal_technique) {
      case GoalTechnique::ABCD: {
        const std::array<std::pair<std::string_view, const std::optional<std::string>*>, 4> parts{
            {{kAbcdParts[0], &g.audience},
             {kAbcdParts[1], &g.behavior},
             {kAbcdParts[2], &g.condition},
             {kAbcdParts[3], &g.degree}}};
        for (const auto& [name, value] : parts) {
          if (!*value || (*value)->empty()) {
            error("GOAL_ABCD_INCOMPLETE", "ABCD goal lacks '" + std::string(name) + "'", path);
          }
        }
        break;
      }
      case GoalTechnique::BloomRevised:
        if (!g.level || g.level->empty()) {
          error("GOAL_BLOOM_LEVEL_MISSING", "goal needs a Bloom level", path);
        } else if (!contains(catalog_.bloom_levels, *g.level)) {
          error("GOAL_BLOOM_LEVEL_UNKNOWN", "'" + *g.level + "' is not a Bloom level", path);
        }
        break;
      case GoalTechnique::Plain3Rs:
        break;
    }
  }

  void process_level(const std::vector<ProcessNode>& nodes, std::size_t depth,
                     const std::string& parent_path) {
    const auto level = static_cast<ProcessLevel>(depth);
    const std::array<Bounds, 4> bounds{spec_.process_bounds.play, spec_.process_bounds.act,
                                       spec_.process_bounds.scene, spec_.process_bounds.instruction};
    const Bounds& b = bounds[depth];
    const auto n = static_cast<int>(nodes.size());
    if (n < b.min || n > b.max) {
      error("PROCESS_BOUNDS",
            std::to_string(n) + " " + std::string(to_string(level)) + " node(s) outside " +
                bounds_text(b),
            parent_path);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& node = nodes[i];
      const std::string path =
          parent_path + "/" + std::string(to_string(level)) + "[" + std::to_string(i) + "]";
      if (node.title.empty()) error("PROCESS_TITLE_EMPTY", "process node has an empty title", path);
      if (node.principle && spec_.process_model == spec::ProcessModel::PASI_Merrill &&
          !contains(catalog_.merrill_principles, *node.principle)) {
        error("PRINCIPLE_UNKNOWN", "'" + *node.principle + "' is not a first principle", path);
      }
      if (depth + 1 < bounds.size()) process_level(node.children, depth + 1, path);
    }
  }

  void assets() {
    for_each_asset(instance_, [&](const AssetRef& a, std::size_t li) {
      const std::string path = "lesson[" + std::to_string(li) + "]";
      if (!AssetRef::is_valid_path(a.path())) {
        error("INVALID_ASSET_PATH", "asset path '" + a.path() + "' is not a safe relative path", path);
        return;
      }
      if (options_.asset_base) {
        std::error_code ec;
        if (!std::filesystem::exists(*options_.asset_base / a.path(), ec)) {
          warning("ASSET_MISSING", "asset '" + a.path() + "' not found under " +
                                       options_.asset_base->string(),
                  path);
        }
      }
    });
  }

  const IdInstance& instance_;
  const spec::IdSpecification& spec_;
  const ValidateOptions& options_;
  const PedagogyCatalog& catalog_;
  Diagnostics diags_;
};

}  // namespace

Diagnostics validate_instance(const IdInstance& instance, const spec::IdSpecification& spec,
                              const ValidateOptions& options) {
  return Validator(instance, spec, options).run();
}

}  // namespace idpl::inst
