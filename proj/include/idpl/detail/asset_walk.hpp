#pragma once

namespace idpl::inst {
namespace detail {

template <typename F>
void visit_frame(const InstructionFrame& f, std::size_t lesson, F& visit) {
  if (f.sound) visit(*f.sound, lesson);
  if (f.image) visit(*f.image, lesson);
}

template <typename F>
void visit_frames(const Frames& f, std::size_t lesson, F& visit) {
  for (const auto* fr : {&f.start, &f.middle, &f.end}) {
    if (*fr) visit_frame(**fr, lesson, visit);
  }
}

template <typename F>
void visit_process(const ProcessNode& n, std::size_t lesson, F& visit) {
  if (n.frame) visit_frame(*n.frame, lesson, visit);
  for (const auto& c : n.children) visit_process(c, lesson, visit);
}

}  // namespace detail

template <typename F>
void for_each_asset(const IdInstance& instance, F&& visit) {
  for (std::size_t li = 0; li < instance.lessons.size(); ++li) {
    const Lesson& lesson = instance.lessons[li];
    if (lesson.frames) detail::visit_frames(*lesson.frames, li, visit);
    for (const auto& g : lesson.goals) {
      if (g.sound) visit(*g.sound, li);
    }
    for (const auto& p : lesson.process) detail::visit_process(p, li, visit);
    for (const auto& item : lesson.content) {
      if (const auto* fact = std::get_if<Fact>(&item)) {
        if (fact->sound) visit(*fact->sound, li);
        if (fact->instructions) detail::visit_frames(*fact->instructions, li, visit);
        for (const auto& c : fact->cases) {
          if (c.sound) visit(*c.sound, li);
          if (c.image) visit(*c.image, li);
        }
      } else {
        for (const auto& r : std::get<Resource>(item).resources) visit(r, li);
      }
    }
  }
}

}  // namespace idpl::inst
