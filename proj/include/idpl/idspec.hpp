#pragma once

// Instructional-design specifications derived from feature configurations,
// the four shipped adult-literacy specifications, and the form schemas of
// the editors generated from a specification.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idpl/featmodel.hpp"
#include "idpl/pedagogy.hpp"

namespace idpl::spec {

enum class GoalTechnique { Plain3Rs, BloomRevised, ABCD };
enum class ProcessModel { PASI, PASI_Merrill, GagneNine, EclecticGeneric };
enum class ContentScheme { PrimerPages, FCRMT, PlainResources };
enum class OptionalSection { context, environment };

struct Bounds {
  int min = 1;
  int max = 25;
  bool operator==(const Bounds&) const = default;
};

struct ProcessBounds {
  Bounds play;
  Bounds act;
  Bounds scene;
  Bounds instruction;
  bool operator==(const ProcessBounds&) const = default;
};

inline constexpr int kMaxProcessUnits = 25;

struct IdSpecification {
  std::string name;
  std::vector<std::string> base{"IPCL"};  // lineage tags
  GoalTechnique goal_technique = GoalTechnique::Plain3Rs;
  ProcessModel process_model = ProcessModel::EclecticGeneric;
  ContentScheme content_scheme = ContentScheme::PrimerPages;
  bool evaluation_required = true;
  std::vector<OptionalSection> optional_sections;  // sorted, unique
  ProcessBounds process_bounds;

  bool has_section(OptionalSection s) const;
  bool uses_pasi() const {
    return process_model == ProcessModel::PASI || process_model == ProcessModel::PASI_Merrill;
  }
  bool operator==(const IdSpecification&) const = default;
};

/// Invariant violations of a specification (empty when valid).
Diagnostics check_specification(const IdSpecification& spec);

std::string_view to_string(GoalTechnique v);
std::string_view to_string(ProcessModel v);
std::string_view to_string(ContentScheme v);
std::string_view to_string(OptionalSection v);

/// Specification JSON with alphabetically ordered keys.
std::string to_json(const IdSpecification& spec);
/// Throws idpl::Error(SPEC_FORMAT) on shape errors or invariant violations.
IdSpecification specification_from_json(std::string_view json_text);

/// Maps a valid configuration of a model that uses the adult-literacy
/// feature names onto a specification. Selected features outside the known
/// vocabulary become lineage tags after "IPCL".
///
/// Throws idpl::Error(INVALID_CONFIG) with the checker's diagnostics, or
/// idpl::Error(MODEL_NOT_RECOGNIZED).
IdSpecification derive_specification(const fm::FeatureModel& model, const fm::Configuration& config);

/// The four adult-literacy specifications, in order 1..4.
std::vector<IdSpecification> preset_specifications();
/// 1-based; throws idpl::Error(INVALID_ARGUMENT) outside 1..4.
IdSpecification preset_specification(int number);
/// The preset re-expressed as a configuration of presets::adult_literacy_model().
fm::Configuration preset_configuration(int number);

// ---------------------------------------------------------------------------
// Editor schemas

enum class FieldKind { short_text, long_text, enumeration, asset_audio, asset_image };

struct FormField {
  std::string id;
  std::string label;
  FieldKind kind = FieldKind::short_text;
  std::vector<std::string> options;  // enumeration only
  bool required = false;
  bool operator==(const FormField&) const = default;
};

struct FormSection {
  std::string id;
  std::string title;
  Bounds repeat{1, 1};
  std::vector<FormField> fields;
  std::vector<FormSection> subsections;
  bool operator==(const FormSection&) const = default;
};

struct EditorSchema {
  std::string spec_name;
  std::vector<FormSection> sections;
  bool operator==(const EditorSchema&) const = default;
};

/// Upper repeat bound for sections the design leaves open-ended.
inline constexpr int kOpenRepeat = 99;

EditorSchema generate_editor_schema(const IdSpecification& spec,
                                    const PedagogyCatalog& catalog = default_catalog());

std::string_view to_string(FieldKind k);
std::string to_json(const EditorSchema& schema);

const FormSection* find_section(const std::vector<FormSection>& sections, std::string_view id);

}  // namespace idpl::spec
