#include <algorithm>
#include <initializer_list>

#include "idpl/idinstance.hpp"
#include "xml_dom.hpp"

namespace idpl::inst {
namespace {

constexpr std::string_view kVocabulary[] = {
    "primer", "lesson",   "title",  "instructions", "start",    "middle",    "end",
    "text",   "sound",    "image",  "goals",        "goal",     "fact",      "cases",
    "case",   "rule",     "model",  "theory",       "play",     "act",       "scene",
    "instruction", "level", "audience", "behavior", "condition", "degree", "principle"};

bool in_vocabulary(std::string_view name) {
  return std::find(std::begin(kVocabulary), std::end(kVocabulary), name) != std::end(kVocabulary);
}

constexpr std::string_view kProcessTags[] = {"play", "act", "scene", "instruction"};

class Reader {
 public:
  Diagnostics diags;

  std::optional<IdInstance> read(const xml::Element& root) {
    if (root.name != "primer") {
      if (!in_vocabulary(root.name)) {
        error(root, "UNKNOWN_ELEMENT", "unknown element <" + root.name + ">", "");
      } else {
        error(root, "UNEXPECTED_ELEMENT", "root element must be <primer>, found <" + root.name + ">",
              "");
      }
      return std::nullopt;
    }
    IdInstance inst;
    const std::string path = "primer";
    for (const char* key : {"spec", "lang"}) {
      if (const auto* v = root.attribute(key)) {
        (std::string_view(key) == "spec" ? inst.spec : inst.lang) = *v;
      } else {
        error(root, "MISSING_ATTRIBUTE", std::string("<primer> needs attribute '") + key + "'", path);
      }
    }
    for (const auto& [k, v] : root.attributes) {
      if (k != "spec" && k != "lang") {
        warn(root, "UNKNOWN_ATTRIBUTE", "ignoring attribute '" + k + "' on <primer>", path);
      }
    }
    check_children(root, {"title", "lesson"}, path);
    container_text(root, path);
    if (auto t = single_leaf(root, "title", path)) inst.title = *t;
    std::size_t li = 0;
    for (const auto& child : root.children) {
      if (child.name == "lesson") {
        inst.lessons.push_back(read_lesson(child, "lesson[" + std::to_string(li++) + "]"));
      }
    }
    if (has_errors(diags)) return std::nullopt;
    return inst;
  }

 private:
  void error(const xml::Element& at, std::string code, std::string msg, const std::string& path) {
    Diagnostic d = make_error(std::move(code), std::move(msg), path);
    d.line = at.line;
    d.column = at.column;
    diags.push_back(std::move(d));
  }

  void warn(const xml::Element& at, std::string code, std::string msg, const std::string& path) {
    Diagnostic d = make_warning(std::move(code), std::move(msg), path);
    d.line = at.line;
    d.column = at.column;
    diags.push_back(std::move(d));
  }

  void check_children(const xml::Element& e, std::initializer_list<std::string_view> allowed,
                      const std::string& path) {
    for (const auto& c : e.children) {
      if (!in_vocabulary(c.name)) {
        error(c, "UNKNOWN_ELEMENT", "unknown element <" + c.name + ">", path);
      } else if (std::find(allowed.begin(), allowed.end(), c.name) == allowed.end()) {
        error(c, "UNEXPECTED_ELEMENT", "<" + c.name + "> is not allowed inside <" + e.name + ">",
              path);
      }
    }
    if (!e.attributes.empty() && e.name != "primer") {
      warn(e, "UNKNOWN_ATTRIBUTE", "ignoring attributes on <" + e.name + ">", path);
    }
  }

  void container_text(const xml::Element& e, const std::string& path) {
    if (!xml::trim(e.text).empty()) {
      error(e, "UNEXPECTED_TEXT", "<" + e.name + "> holds elements, not text", path);
    }
  }

  const xml::Element* single(const xml::Element& parent, std::string_view name,
                             const std::string& path) {
    const xml::Element* found = nullptr;
    for (const auto& c : parent.children) {
      if (c.name != name) continue;
      if (found) {
        error(c, "DUPLICATE_CHILD",
              "<" + parent.name + "> has more than one <" + std::string(name) + ">", path);
        continue;
      }
      found = &c;
    }
    return found;
  }

  std::string leaf_text(const xml::Element& e, const std::string& path) {
    for (const auto& c : e.children) {
      error(c, in_vocabulary(c.name) ? "UNEXPECTED_ELEMENT" : "UNKNOWN_ELEMENT",
            "<" + e.name + "> holds text only, found <" + c.name + ">", path);
    }
    return xml::trim(e.text);
  }

  std::optional<std::string> single_leaf(const xml::Element& parent, std::string_view name,
                                         const std::string& path) {
    if (const auto* e = single(parent, name, path)) return leaf_text(*e, path);
    return std::nullopt;
  }

  std::string required_leaf(const xml::Element& parent, std::string_view name,
                            const std::string& path) {
    if (auto v = single_leaf(parent, name, path)) return *v;
    error(parent, "MISSING_CHILD",
          "<" + parent.name + "> requires a <" + std::string(name) + "> child", path);
    return {};
  }

  std::optional<AssetRef> asset_from(const xml::Element& e, MediaKind kind, const std::string& path) {
    std::string p = leaf_text(e, path);
    if (p.empty()) return std::nullopt;
    if (!AssetRef::is_valid_path(p)) {
      error(e, "INVALID_ASSET_PATH",
            "asset path '" + p + "' must be relative without '..' segments", path);
      return std::nullopt;
    }
    return AssetRef(std::move(p), kind);
  }

  std::optional<AssetRef> single_asset(const xml::Element& parent, std::string_view name,
                                       const std::string& path) {
    const auto* e = single(parent, name, path);
    if (!e) return std::nullopt;
    return asset_from(*e, name == "image" ? MediaKind::image : MediaKind::audio, path);
  }

  // text/sound/image children of `e` as a frame; nullopt when none carry data.
  std::optional<InstructionFrame> frame_of(const xml::Element& e, const std::string& path) {
    InstructionFrame f;
    if (auto t = single_leaf(e, "text", path); t && !t->empty()) f.text = *t;
    f.sound = single_asset(e, "sound", path);
    f.image = single_asset(e, "image", path);
    if (f.empty()) return std::nullopt;
    return f;
  }

  std::optional<Frames> read_frames(const xml::Element& e, const std::string& path) {
    check_children(e, {"start", "middle", "end"}, path);
    container_text(e, path);
    Frames frames;
    auto read = [&](const char* name, std::optional<InstructionFrame>& slot) {
      if (const auto* fe = single(e, name, path)) {
        const std::string sub = path + "/" + name;
        check_children(*fe, {"text", "sound", "image"}, sub);
        container_text(*fe, sub);
        slot = frame_of(*fe, sub);
      }
    };
    read("start", frames.start);
    read("middle", frames.middle);
    read("end", frames.end);
    if (frames.empty()) return std::nullopt;
    return frames;
  }

  Goal read_goal(const xml::Element& e, const std::string& path) {
    check_children(e, {"text", "sound", "level", "audience", "behavior", "condition", "degree"}, path);
    container_text(e, path);
    Goal g;
    g.text = required_leaf(e, "text", path);
    g.sound = single_asset(e, "sound", path);
    g.level = single_leaf(e, "level", path);
    g.audience = single_leaf(e, "audience", path);
    g.behavior = single_leaf(e, "behavior", path);
    g.condition = single_leaf(e, "condition", path);
    g.degree = single_leaf(e, "degree", path);
    return g;
  }

  ProcessNode read_process(const xml::Element& e, std::size_t depth, const std::string& path) {
    const bool leaf = depth + 1 == std::size(kProcessTags);
    if (leaf) {
      check_children(e, {"title", "text", "sound", "image", "principle"}, path);
    } else {
      check_children(e, {"title", "text", "sound", "image", kProcessTags[depth + 1]}, path);
    }
    container_text(e, path);
    ProcessNode n;
    n.title = required_leaf(e, "title", path);
    n.frame = frame_of(e, path);
    if (leaf) n.principle = single_leaf(e, "principle", path);
    if (!leaf) {
      std::size_t i = 0;
      for (const auto& c : e.children) {
        if (c.name == kProcessTags[depth + 1]) {
          n.children.push_back(read_process(
              c, depth + 1, path + "/" + c.name + "[" + std::to_string(i++) + "]"));
        }
      }
    }
    return n;
  }

  Fact read_fact(const xml::Element& e, const std::string& path) {
    check_children(e, {"text", "sound", "instructions", "cases"}, path);
    container_text(e, path);
    Fact f;
    f.text = required_leaf(e, "text", path);
    f.sound = single_asset(e, "sound", path);
    if (const auto* ins = single(e, "instructions", path)) {
      f.instructions = read_frames(*ins, path + "/instructions");
    }
    if (const auto* cases = single(e, "cases", path)) {
      check_children(*cases, {"case"}, path);
      container_text(*cases, path);
      std::size_t i = 0;
      for (const auto& c : cases->children) {
        if (c.name != "case") continue;
        const std::string sub = path + "/case[" + std::to_string(i++) + "]";
        check_children(c, {"text", "sound", "image"}, sub);
        container_text(c, sub);
        Case cs;
        cs.text = required_leaf(c, "text", sub);
        cs.sound = single_asset(c, "sound", sub);
        cs.image = single_asset(c, "image", sub);
        f.cases.push_back(std::move(cs));
      }
    }
    return f;
  }

  Resource read_resource(const xml::Element& e, ResourceKind kind, const std::string& path) {
    check_children(e, {"text", "sound", "image"}, path);
    container_text(e, path);
    Resource r;
    r.kind = kind;
    r.text = required_leaf(e, "text", path);
    for (const auto& c : e.children) {
      if (c.name == "sound" || c.name == "image") {
        if (auto a = asset_from(c, c.name == "image" ? MediaKind::image : MediaKind::audio, path)) {
          r.resources.push_back(std::move(*a));
        }
      }
    }
    return r;
  }

  Lesson read_lesson(const xml::Element& e, const std::string& path) {
    check_children(e, {"title", "instructions", "goals", "play", "fact", "rule", "model", "theory"},
                   path);
    container_text(e, path);
    Lesson l;
    l.title = required_leaf(e, "title", path);
    if (const auto* ins = single(e, "instructions", path)) {
      l.frames = read_frames(*ins, path + "/instructions");
    }
    if (const auto* goals = single(e, "goals", path)) {
      check_children(*goals, {"goal"}, path);
      container_text(*goals, path);
      std::size_t i = 0;
      for (const auto& g : goals->children) {
        if (g.name == "goal") l.goals.push_back(read_goal(g, path + "/goal[" + std::to_string(i++) + "]"));
      }
    }
    std::size_t plays = 0;
    std::size_t facts = 0;
    std::size_t resources = 0;
    for (const auto& c : e.children) {
      if (c.name == "play") {
        l.process.push_back(read_process(c, 0, path + "/play[" + std::to_string(plays++) + "]"));
      } else if (c.name == "fact") {
        l.content.emplace_back(read_fact(c, path + "/fact[" + std::to_string(facts++) + "]"));
      } else if (c.name == "rule" || c.name == "model" || c.name == "theory") {
        const auto kind = c.name == "rule"    ? ResourceKind::rule
                          : c.name == "model" ? ResourceKind::model
                                              : ResourceKind::theory;
        l.content.emplace_back(
            read_resource(c, kind, path + "/" + c.name + "[" + std::to_string(resources++) + "]"));
      }
    }
    return l;
  }
};

}  // namespace

InstanceParseResult parse_instance(std::string_view xml_text) {
  InstanceParseResult result;
  auto doc = xml::parse(xml_text);
  if (doc.error) {
    result.diagnostics.push_back(*doc.error);
    return result;
  }
  Reader reader;
  result.instance = reader.read(*doc.root);
  result.diagnostics = std::move(reader.diags);
  return result;
}

}  // namespace idpl::inst
