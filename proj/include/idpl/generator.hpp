#pragma once

// Primer bundle generation: a manifest, one animation timeline per lesson
// and an asset manifest, written as deterministic JSON files.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "idpl/idinstance.hpp"
#include "idpl/idspec.hpp"

namespace idpl::gen {

enum class StepKind { show_frame, present_goal, drop_fact, join, reveal_word, practice_prompt };
enum class FramePosition { start, middle, end };

std::string_view to_string(StepKind k);
std::string_view to_string(FramePosition p);

/// One animation step. Which payload members are meaningful depends on kind:
///   show_frame      frame, text?, sound?, image?
///   present_goal    text, sound?
///   drop_fact       text (one syllable), slot, word, sound? (the fact's sound)
///   join            text (the word), parts
///   reveal_word     text, sound?, image?
///   practice_prompt words
struct TimelineStep {
  int id = 0;
  StepKind kind = StepKind::show_frame;
  std::optional<FramePosition> frame;
  std::string text;
  std::optional<inst::AssetRef> sound;
  std::optional<inst::AssetRef> image;
  std::optional<int> slot;
  std::string word;
  std::vector<std::string> parts;
  std::vector<std::string> words;

  bool operator==(const TimelineStep&) const = default;
};

struct LessonEntry {
  int index = 0;
  std::string title;
  std::string file;  // relative to the bundle root
  bool operator==(const LessonEntry&) const = default;
};

struct Manifest {
  std::string title;
  std::string lang;
  std::string spec;
  std::vector<LessonEntry> lessons;
  bool operator==(const Manifest&) const = default;
};

struct LessonTimeline {
  std::string title;
  std::vector<TimelineStep> steps;
  std::vector<inst::ProcessNode> process;  // copied verbatim from the lesson
  bool operator==(const LessonTimeline&) const = default;
};

struct StepRef {
  int lesson = 0;
  int step = 0;
  bool operator==(const StepRef&) const = default;
};

struct AssetEntry {
  inst::AssetRef ref;
  std::vector<StepRef> referenced_by;
  bool present = false;
  bool operator==(const AssetEntry&) const = default;
};

struct PrimerBundle {
  Manifest manifest;
  std::vector<LessonTimeline> timelines;
  std::vector<AssetEntry> assets;  // sorted by path, then kind
  bool operator==(const PrimerBundle&) const = default;
};

struct GenerateOptions {
  /// Directory asset paths resolve against; when absent every asset is
  /// reported as not present.
  std::optional<std::filesystem::path> asset_base;
};

/// Throws idpl::Error(VALIDATION_ERRORS_PRESENT) carrying the validator's
/// diagnostics, or idpl::Error(UNDECOMPOSABLE_WORD).
PrimerBundle generate_primer(const inst::IdInstance& instance, const spec::IdSpecification& spec,
                             const GenerateOptions& options = {});

/// File name of lesson `index` inside a bundle, e.g. "lessons/07.json".
std::string lesson_file_name(std::size_t index);

std::string manifest_json(const PrimerBundle& bundle);
std::string lesson_json(const PrimerBundle& bundle, std::size_t lesson);
std::string assets_json(const PrimerBundle& bundle);

/// Writes manifest.json, lessons/NN.json and assets.json under `out_dir`
/// and returns the written paths in that order. Throws idpl::Error(IO_ERROR).
std::vector<std::filesystem::path> write_bundle(const PrimerBundle& bundle,
                                                const std::filesystem::path& out_dir);

struct MissingAsset {
  inst::AssetRef ref;
  std::size_t lesson = 0;
  bool operator==(const MissingAsset&) const = default;
};

/// Every asset reference whose file is absent under `base_dir`, in document
/// order. Throws idpl::Error(IO_ERROR) when base_dir is not a readable directory.
std::vector<MissingAsset> missing_asset_report(const inst::IdInstance& instance,
                                               const std::filesystem::path& base_dir);

}  // namespace idpl::gen
