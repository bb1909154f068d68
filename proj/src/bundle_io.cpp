#include <fstream>

#include <nlohmann/json.hpp>

#include "idpl/generator.hpp"

namespace idpl::gen {
namespace {

using json = nlohmann::json;

json frame_json(const inst::InstructionFrame& f) {
  json j = json::object();
  if (f.text) j["text"] = *f.text;
  if (f.sound) j["sound"] = f.sound->path();
  if (f.image) j["image"] = f.image->path();
  return j;
}

json process_json(const inst::ProcessNode& n, std::size_t depth) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(process_json(c, depth + 1));
  json j{{"children", children},
         {"kind", std::string(inst::to_string(static_cast<inst::ProcessLevel>(depth)))},
         {"title", n.title}};
  if (n.frame) j["frame"] = frame_json(*n.frame);
  if (n.principle) j["principle"] = *n.principle;
  return j;
}

json step_json(const TimelineStep& s) {
  json j{{"id", s.id}, {"kind", std::string(to_string(s.kind))}};
  auto assets = [&] {
    if (s.sound) j["sound"] = s.sound->path();
    if (s.image) j["image"] = s.image->path();
  };
  switch (s.kind) {
    case StepKind::show_frame:
      j["frame"] = std::string(to_string(s.frame.value_or(FramePosition::start)));
      if (!s.text.empty()) j["text"] = s.text;
      assets();
      break;
    case StepKind::present_goal:
    case StepKind::reveal_word:
      j["text"] = s.text;
      assets();
      break;
    case StepKind::drop_fact:
      j["text"] = s.text;
      j["slot"] = s.slot.value_or(0);
      j["word"] = s.word;
      assets();
      break;
    case StepKind::join:
      j["text"] = s.text;
      j["parts"] = s.parts;
      break;
    case StepKind::practice_prompt:
      j["words"] = s.words;
      break;
  }
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("IO_ERROR", "cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw Error("IO_ERROR", "failed writing '" + path.string() + "'");
}

}  // namespace

std::string manifest_json(const PrimerBundle& bundle) {
  json lessons = json::array();
  for (const auto& e : bundle.manifest.lessons) {
    lessons.push_back(json{{"file", e.file}, {"index", e.index}, {"title", e.title}});
  }
  json doc{{"lang", bundle.manifest.lang},
           {"lessons", lessons},
           {"spec", bundle.manifest.spec},
           {"title", bundle.manifest.title}};
  return doc.dump(2) + "\n";
}

std::string lesson_json(const PrimerBundle& bundle, std::size_t lesson) {
  const auto& t = bundle.timelines.at(lesson);
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(step_json(s));
  json doc{{"index", static_cast<int>(lesson)}, {"steps", steps}, {"title", t.title}};
  if (!t.process.empty()) {
    json plays = json::array();
    for (const auto& p : t.process) plays.push_back(process_json(p, 0));
    doc["process"] = plays;
  }
  return doc.dump(2) + "\n";
}

std::string assets_json(const PrimerBundle& bundle) {
  json list = json::array();
  for (const auto& a : bundle.assets) {
    json refs = json::array();
    for (const auto& r : a.referenced_by) refs.push_back(json{{"lesson", r.lesson}, {"step", r.step}});
    list.push_back(json{{"kind", a.ref.kind() == inst::MediaKind::image ? "image" : "audio"},
                        {"path", a.ref.path()},
                        {"present", a.present},
                        {"referenced_by", refs}});
  }
  return json{{"assets", list}}.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_bundle(const PrimerBundle& bundle,
                                                const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "lessons", ec);
  if (ec) {
    throw Error("IO_ERROR", "cannot create '" + (out_dir / "lessons").string() + "': " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::filesystem::path& rel, const std::string& content) {
    write_file(out_dir / rel, content);
    written.push_back(out_dir / rel);
  };
  put("manifest.json", manifest_json(bundle));
  for (std::size_t i = 0; i < bundle.timelines.size(); ++i) {
    put(lesson_file_name(i), lesson_json(bundle, i));
  }
  put("assets.json", assets_json(bundle));
  return written;
}

}  // namespace idpl::gen
