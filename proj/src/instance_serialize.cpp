#include <sstream>

#include "idpl/idinstance.hpp"
#include "xml_dom.hpp"

namespace idpl::inst {
namespace {

class Writer {
 public:
  std::string str() const { return os_.str(); }

  void open(std::string_view name) {
    indent();
    os_ << '<' << name << ">\n";
    ++depth_;
  }
  void close(std::string_view name) {
    --depth_;
    indent();
    os_ << "</" << name << ">\n";
  }
  void leaf(std::string_view name, std::string_view text) {
    indent();
    os_ << '<' << name << '>' << xml::escape_text(text) << "</" << name << ">\n";
  }
  void opt_leaf(std::string_view name, const std::optional<std::string>& text) {
    if (text) leaf(name, *text);
  }
  void asset(std::string_view name, const std::optional<AssetRef>& a) {
    if (a) leaf(name, a->path());
  }
  void raw(std::string_view s) { os_ << s; }

  void frame_fields(const InstructionFrame& f) {
    opt_leaf("text", f.text);
    asset("sound", f.sound);
    asset("image", f.image);
  }

  void frames(const Frames& f) {
    if (f.empty()) return;
    open("instructions");
    const std::pair<const char*, const std::optional<InstructionFrame>*> parts[] = {
        {"start", &f.start}, {"middle", &f.middle}, {"end", &f.end}};
    for (const auto& [name, frame] : parts) {
      if (!*frame || (*frame)->empty()) continue;
      open(name);
      frame_fields(**frame);
      close(name);
    }
    close("instructions");
  }

  void process(const ProcessNode& n, std::size_t depth) {
    const auto tag = to_string(static_cast<ProcessLevel>(depth));
    open(tag);
    leaf("title", n.title);
    if (n.frame) frame_fields(*n.frame);
    if (depth == 3) opt_leaf("principle", n.principle);
    for (const auto& c : n.children) process(c, depth + 1);
    close(tag);
  }

  void goal(const Goal& g) {
    open("goal");
    leaf("text", g.text);
    asset("sound", g.sound);
    opt_leaf("level", g.level);
    opt_leaf("audience", g.audience);
    opt_leaf("behavior", g.behavior);
    opt_leaf("condition", g.condition);
    opt_leaf("degree", g.degree);
    close("goal");
  }

  void fact(const Fact& f) {
    open("fact");
    leaf("text", f.text);
    asset("sound", f.sound);
    if (f.instructions) frames(*f.instructions);
    if (!f.cases.empty()) {
      open("cases");
      for (const auto& c : f.cases) {
        open("case");
        leaf("text", c.text);
        asset("sound", c.sound);
        asset("image", c.image);
        close("case");
      }
      close("cases");
    }
    close("fact");
  }

  void resource(const Resource& r) {
    const auto tag = to_string(r.kind);
    open(tag);
    leaf("text", r.text);
    for (const auto& a : r.resources) leaf(a.kind() == MediaKind::image ? "image" : "sound", a.path());
    close(tag);
  }

  void lesson(const Lesson& l) {
    open("lesson");
    leaf("title", l.title);
    if (l.frames) frames(*l.frames);
    if (!l.goals.empty()) {
      open("goals");
      for (const auto& g : l.goals) goal(g);
      close("goals");
    }
    for (const auto& p : l.process) process(p, 0);
    for (const auto& item : l.content) {
      if (const auto* f = std::get_if<Fact>(&item)) {
        fact(*f);
      } else {
        resource(std::get<Resource>(item));
      }
    }
    close("lesson");
  }

  int depth_ = 0;

 private:
  void indent() {
    for (int i = 0; i < depth_; ++i) os_ << "  ";
  }
  std::ostringstream os_;
};

}  // namespace

std::string serialize_instance(const IdInstance& instance) {
  Writer w;
  w.raw("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  w.raw("<primer spec=\"" + xml::escape_attribute(instance.spec) + "\" lang=\"" +
        xml::escape_attribute(instance.lang) + "\">\n");
  w.depth_ = 1;
  if (!instance.title.empty()) w.leaf("title", instance.title);
  for (const auto& l : instance.lessons) w.lesson(l);
  w.raw("</primer>\n");
  return w.str();
}

}  // namespace idpl::inst
