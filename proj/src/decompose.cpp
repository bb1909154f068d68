#include <algorithm>
#include <set>

#include "idpl/idinstance.hpp"
#include "idpl/utf8.hpp"

namespace idpl::inst {
namespace {

struct Segmenter {
  std::string_view word;
  std::vector<std::string> facts;  // longest first
  std::vector<bool> boundary;      // byte offsets that start a codepoint
  std::vector<bool> dead;          // byte offsets already shown to have no completion
  std::vector<std::string> parts;

  bool from(std::size_t pos) {
    if (pos == word.size()) return true;
    if (dead[pos]) return false;
    for (const auto& f : facts) {
      const std::size_t end = pos + f.size();
      if (end > word.size() || !boundary[end] || word.compare(pos, f.size(), f) != 0) continue;
      parts.push_back(f);
      if (from(pos + f.size())) return true;
      parts.pop_back();
    }
    dead[pos] = true;
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::string>> decompose_word(std::string_view word,
                                                       const std::vector<std::string>& taught) {
  if (word.empty()) throw Error("EMPTY_WORD", "cannot decompose an empty word");

  Segmenter s{word, {}, std::vector<bool>(word.size() + 1, false),
              std::vector<bool>(word.size() + 1, false), {}};
  std::size_t offset = 0;
  for (const auto& cp : utf8::split_codepoints(word)) {
    s.boundary[offset] = true;
    offset += cp.size();
  }
  s.boundary[word.size()] = true;
  std::set<std::string_view> seen;
  for (const auto& t : taught) {
    if (!t.empty() && seen.insert(t).second) s.facts.push_back(t);
  }
  std::stable_sort(s.facts.begin(), s.facts.end(), [](const std::string& a, const std::string& b) {
    return utf8::codepoint_count(a) > utf8::codepoint_count(b);
  });
  if (!s.from(0)) return std::nullopt;
  return std::move(s.parts);
}

std::vector<std::string> taught_facts_through(const IdInstance& instance, std::size_t lesson_index) {
  if (lesson_index >= instance.lessons.size()) {
    throw Error("INDEX_OUT_OF_RANGE", "lesson index " + std::to_string(lesson_index) +
                                          " out of range for " +
                                          std::to_string(instance.lessons.size()) + " lessons");
  }
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i <= lesson_index; ++i) {
    for (const auto& item : instance.lessons[i].content) {
      if (const auto* f = std::get_if<Fact>(&item); f && seen.insert(f->text).second) {
        out.push_back(f->text);
      }
    }
  }
  return out;
}

}  // namespace idpl::inst
