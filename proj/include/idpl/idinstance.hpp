#pragma once

// Instructional-design instance documents: the lessons of a concrete primer
// with their instruction frames, goals, optional play/act/scene/instruction
// process tree and fact/case content.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idpl/diagnostic.hpp"
#include "idpl/idspec.hpp"
#include "idpl/pedagogy.hpp"

namespace idpl::inst {

enum class MediaKind { audio, image };

/// Relative path to a media file. Construction rejects absolute paths and
/// any `..` segment.
class AssetRef {
 public:
  /// Throws idpl::Error(INVALID_ASSET_PATH).
  AssetRef(std::string path, MediaKind kind);

  static bool is_valid_path(std::string_view path);

  const std::string& path() const noexcept { return path_; }
  MediaKind kind() const noexcept { return kind_; }

  bool operator==(const AssetRef&) const = default;
  auto operator<=>(const AssetRef&) const = default;

 private:
  std::string path_;
  MediaKind kind_;
};

struct InstructionFrame {
  std::optional<std::string> text;
  std::optional<AssetRef> sound;
  std::optional<AssetRef> image;

  bool empty() const { return !text && !sound && !image; }
  bool operator==(const InstructionFrame&) const = default;
};

struct Frames {
  std::optional<InstructionFrame> start;
  std::optional<InstructionFrame> middle;
  std::optional<InstructionFrame> end;

  bool empty() const { return !start && !middle && !end; }
  bool operator==(const Frames&) const = default;
};

struct Goal {
  std::string text;
  std::optional<AssetRef> sound;
  std::optional<std::string> level;  // Bloom level
  std::optional<std::string> audience;
  std::optional<std::string> behavior;
  std::optional<std::string> condition;
  std::optional<std::string> degree;

  bool operator==(const Goal&) const = default;
};

/// One node of the play > act > scene > instruction tree; depth gives the kind.
struct ProcessNode {
  std::string title;
  std::optional<InstructionFrame> frame;
  std::optional<std::string> principle;  // instruction level only
  std::vector<ProcessNode> children;

  bool operator==(const ProcessNode&) const;
};

enum class ProcessLevel { play = 0, act = 1, scene = 2, instruction = 3 };
std::string_view to_string(ProcessLevel level);

struct Case {
  std::string text;
  std::optional<AssetRef> sound;
  std::optional<AssetRef> image;
  bool operator==(const Case&) const = default;
};

struct Fact {
  std::string text;
  std::optional<AssetRef> sound;
  std::optional<Frames> instructions;
  std::vector<Case> cases;
  bool operator==(const Fact&) const = default;
};

enum class ResourceKind { rule, model, theory };
std::string_view to_string(ResourceKind k);

struct Resource {
  ResourceKind kind = ResourceKind::rule;
  std::string text;
  std::vector<AssetRef> resources;
  bool operator==(const Resource&) const = default;
};

using ContentItem = std::variant<Fact, Resource>;

struct Lesson {
  std::string title;
  std::optional<Frames> frames;
  std::vector<Goal> goals;
  std::vector<ProcessNode> process;  // plays; empty = no process tree
  std::vector<ContentItem> content;
  bool operator==(const Lesson&) const = default;
};

struct IdInstance {
  std::string spec;
  std::string lang;
  std::string title;
  std::vector<Lesson> lessons;
  bool operator==(const IdInstance&) const = default;
};

// ---------------------------------------------------------------------------

struct InstanceParseResult {
  std::optional<IdInstance> instance;
  Diagnostics diagnostics;
  bool ok() const { return instance.has_value(); }
};

InstanceParseResult parse_instance(std::string_view xml);

/// Canonical XML: declaration line, two-space indentation, elements in type
/// order, attributes only on the root element.
std::string serialize_instance(const IdInstance& instance);

/// Splits `word` into taught facts, scanning left to right and trying longer
/// facts (by codepoint count) first with backtracking. Returns the first full
/// segmentation, or nullopt when none exists.
/// Throws idpl::Error(EMPTY_WORD).
std::optional<std::vector<std::string>> decompose_word(std::string_view word,
                                                       const std::vector<std::string>& taught);

/// Fact texts of lessons 0..=lesson_index in first-occurrence order.
/// Throws idpl::Error(INDEX_OUT_OF_RANGE).
std::vector<std::string> taught_facts_through(const IdInstance& instance, std::size_t lesson_index);

struct ValidateOptions {
  std::optional<std::filesystem::path> asset_base;  // enables ASSET_MISSING warnings
  const PedagogyCatalog* catalog = nullptr;         // default_catalog() when null
};

Diagnostics validate_instance(const IdInstance& instance, const spec::IdSpecification& spec,
                              const ValidateOptions& options = {});

/// Visits every asset reference with the index of the lesson that holds it,
/// in document order.
template <typename F>
void for_each_asset(const IdInstance& instance, F&& visit);

}  // namespace idpl::inst

#include "idpl/detail/asset_walk.hpp"
