#include <map>

#include "idpl/generator.hpp"

namespace idpl::gen {
namespace {

using inst::AssetRef;
using inst::Fact;

class TimelineBuilder {
 public:
  explicit TimelineBuilder(LessonTimeline& out) : out_(out) {}

  TimelineStep& add(StepKind kind) {
    TimelineStep s;
    s.id = static_cast<int>(out_.steps.size());
    s.kind = kind;
    out_.steps.push_back(std::move(s));
    return out_.steps.back();
  }

  void frame(FramePosition pos, const inst::InstructionFrame& f) {
    auto& s = add(StepKind::show_frame);
    s.frame = pos;
    s.text = f.text.value_or("");
    s.sound = f.sound;
    s.image = f.image;
  }

 private:
  LessonTimeline& out_;
};

LessonTimeline build_lesson(const inst::IdInstance& instance, std::size_t li) {
  const inst::Lesson& lesson = instance.lessons[li];
  LessonTimeline t;
  t.title = lesson.title;
  t.process = lesson.process;
  TimelineBuilder b(t);

  const auto taught = inst::taught_facts_through(instance, li);
  std::map<std::string, std::optional<AssetRef>> fact_sound;
  for (std::size_t i = 0; i <= li; ++i) {
    for (const auto& item : instance.lessons[i].content) {
      if (const auto* f = std::get_if<Fact>(&item)) fact_sound.emplace(f->text, f->sound);
    }
  }

  if (lesson.frames && lesson.frames->start) b.frame(FramePosition::start, *lesson.frames->start);
  for (const auto& g : lesson.goals) {
    auto& s = b.add(StepKind::present_goal);
    s.text = g.text;
    s.sound = g.sound;
  }
  if (lesson.frames && lesson.frames->middle) b.frame(FramePosition::middle, *lesson.frames->middle);

  std::vector<std::string> practice;
  for (const auto& item : lesson.content) {
    const auto* fact = std::get_if<Fact>(&item);
    if (!fact) continue;

    auto& drop = b.add(StepKind::drop_fact);
    drop.text = fact->text;
    drop.word = fact->text;
    drop.slot = 0;
    drop.sound = fact->sound;
    auto& reveal = b.add(StepKind::reveal_word);
    reveal.text = fact->text;
    reveal.sound = fact->sound;

    for (const auto& c : fact->cases) {
      auto parts = inst::decompose_word(c.text, taught);
      if (!parts) {
        throw Error("UNDECOMPOSABLE_WORD",
                    "word '" + c.text + "' in lesson " + std::to_string(li) +
                        " cannot be decomposed into taught facts");
      }
      for (std::size_t k = 0; k < parts->size(); ++k) {
        auto& s = b.add(StepKind::drop_fact);
        s.text = (*parts)[k];
        s.word = c.text;
        s.slot = static_cast<int>(k);
        if (auto it = fact_sound.find(s.text); it != fact_sound.end()) s.sound = it->second;
      }
      auto& join = b.add(StepKind::join);
      join.text = c.text;
      join.parts = *parts;
      auto& word = b.add(StepKind::reveal_word);
      word.text = c.text;
      word.sound = c.sound;
      word.image = c.image;
      practice.push_back(c.text);
    }
  }
  if (!practice.empty()) b.add(StepKind::practice_prompt).words = std::move(practice);
  if (lesson.frames && lesson.frames->end) b.frame(FramePosition::end, *lesson.frames->end);
  return t;
}

}  // namespace

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::show_frame: return "show_frame";
    case StepKind::present_goal: return "present_goal";
    case StepKind::drop_fact: return "drop_fact";
    case StepKind::join: return "join";
    case StepKind::reveal_word: return "reveal_word";
    case StepKind::practice_prompt: return "practice_prompt";
  }
  return "?";
}

std::string_view to_string(FramePosition p) {
  switch (p) {
    case FramePosition::start: return "start";
    case FramePosition::middle: return "middle";
    case FramePosition::end: return "end";
  }
  return "?";
}

std::string lesson_file_name(std::size_t index) {
  std::string n = std::to_string(index);
  if (n.size() < 2) n.insert(0, 2 - n.size(), '0');
  return "lessons/" + n + ".json";
}

PrimerBundle generate_primer(const inst::IdInstance& instance, const spec::IdSpecification& spec,
                             const GenerateOptions& options) {
  auto diags = inst::validate_instance(instance, spec, {options.asset_base, nullptr});
  if (has_errors(diags)) {
    throw Error("VALIDATION_ERRORS_PRESENT",
                std::to_string(error_count(diags)) + " validation error(s) in the instance",
                std::move(diags));
  }

  PrimerBundle bundle;
  bundle.manifest = Manifest{instance.title, instance.lang, instance.spec, {}};
  for (std::size_t li = 0; li < instance.lessons.size(); ++li) {
    bundle.manifest.lessons.push_back(
        LessonEntry{static_cast<int>(li), instance.lessons[li].title, lesson_file_name(li)});
    bundle.timelines.push_back(build_lesson(instance, li));
  }

  std::map<AssetRef, AssetEntry> assets;
  inst::for_each_asset(instance, [&](const AssetRef& a, std::size_t) {
    assets.try_emplace(a, AssetEntry{a, {}, false});
  });
  for (std::size_t li = 0; li < bundle.timelines.size(); ++li) {
    for (const auto& step : bundle.timelines[li].steps) {
      for (const auto* ref : {&step.sound, &step.image}) {
        if (!*ref) continue;
        auto it = assets.try_emplace(**ref, AssetEntry{**ref, {}, false}).first;
        it->second.referenced_by.push_back(StepRef{static_cast<int>(li), step.id});
      }
    }
  }
  for (auto& [ref, entry] : assets) {
    if (options.asset_base) {
      std::error_code ec;
      entry.present = std::filesystem::exists(*options.asset_base / ref.path(), ec);
    }
    bundle.assets.push_back(std::move(entry));
  }
  return bundle;
}

std::vector<MissingAsset> missing_asset_report(const inst::IdInstance& instance,
                                               const std::filesystem::path& base_dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(base_dir, ec)) {
    throw Error("IO_ERROR", "asset directory '" + base_dir.string() + "' is not a readable directory");
  }
  std::vector<MissingAsset> out;
  inst::for_each_asset(instance, [&](const AssetRef& a, std::size_t li) {
    std::error_code e;
    if (!std::filesystem::exists(base_dir / a.path(), e)) out.push_back(MissingAsset{a, li});
  });
  return out;
}

}  // namespace idpl::gen
