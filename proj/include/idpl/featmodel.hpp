#pragma once

// Feature models with group kinds, clone cardinalities, typed attributes and
// requires/excludes constraints, plus configuration checking and brute-force
// enumeration over feature selections.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idpl/diagnostic.hpp"

namespace idpl::fm {

enum class Variability { mandatory, optional };
enum class GroupKind { and_, alternative, or_ };

struct Cardinality {
  int min = 1;
  int max = 1;

  bool is_clone() const noexcept { return !(min == 1 && max == 1); }
  bool operator==(const Cardinality&) const = default;
};

struct EnumDomain {
  std::vector<std::string> literals;
  bool operator==(const EnumDomain&) const = default;
};
struct IntRangeDomain {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const IntRangeDomain&) const = default;
};
struct TextDomain {
  bool operator==(const TextDomain&) const = default;
};
using AttributeDomain = std::variant<EnumDomain, IntRangeDomain, TextDomain>;

struct AttributeDecl {
  std::string name;
  AttributeDomain domain;
  bool required = false;
  bool operator==(const AttributeDecl&) const = default;
};

struct Group;

struct Feature {
  std::string name;
  Variability variability = Variability::mandatory;
  Cardinality cardinality;
  std::vector<Group> groups;
  std::vector<AttributeDecl> attributes;

  bool operator==(const Feature&) const;
};

/// Members of alternative/or groups always carry Variability::optional; the
/// group kind governs their selection.
struct Group {
  GroupKind kind = GroupKind::and_;
  std::vector<Feature> children;

  bool operator==(const Group&) const;
};

enum class ConstraintKind { requires_, excludes };

struct CrossTreeConstraint {
  ConstraintKind kind = ConstraintKind::requires_;
  std::string lhs;
  std::string rhs;
  bool operator==(const CrossTreeConstraint&) const = default;
};

struct FeatureModel {
  std::string name;
  Feature root;
  std::vector<CrossTreeConstraint> constraints;
  bool operator==(const FeatureModel&) const = default;
};

// ---------------------------------------------------------------------------
// DSL

struct ModelParseResult {
  std::optional<FeatureModel> model;
  Diagnostics diagnostics;

  bool ok() const { return model.has_value(); }
};

ModelParseResult parse_model(std::string_view source);

/// Canonical DSL text. Attributes come first in a block, then groups in
/// order (group members elaborated right after their group line), then, in
/// the root block only, all constraints in declaration order.
std::string serialize_model(const FeatureModel& model);

// ---------------------------------------------------------------------------
// Configurations

using AttributeValue = std::variant<std::string, std::int64_t>;

struct AttributeAssignment {
  std::string feature;
  int instance = 1;  // 1-based clone index
  std::string name;
  AttributeValue value;
  bool operator==(const AttributeAssignment&) const = default;
};

struct Configuration {
  std::string model;
  std::map<std::string, int> selections;  // feature -> clone count; absent = not selected
  std::vector<AttributeAssignment> attributes;

  int count_of(const std::string& feature) const;
  bool selected(const std::string& feature) const { return count_of(feature) > 0; }
  bool operator==(const Configuration&) const = default;
};

/// Reads the JSON configuration format
/// `{"model": ..., "select": {name: count}, "attrs": [...]}`.
/// Throws idpl::Error(CONFIG_FORMAT) on shape errors.
Configuration configuration_from_json(std::string_view json_text);
std::string configuration_to_json(const Configuration& config);

struct ValidityReport {
  bool valid = true;
  Diagnostics diagnostics;
};

struct CheckOptions {
  bool check_attributes = true;  // R8
};

ValidityReport check_configuration(const FeatureModel& model, const Configuration& config,
                                   CheckOptions options = {});

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kDefaultCloneCap = 3;
inline constexpr std::uint64_t kMaxSearchSpace = 1'000'000;

/// Number of tree-consistent candidates the enumerator would visit, saturated
/// at kMaxSearchSpace + 1.
std::uint64_t search_space(const FeatureModel& model, int clone_cap = kDefaultCloneCap);

/// Calls `visit` for every configuration passing R1-R7, depth-first with
/// children in declaration order ("not selected" before "selected", counts
/// ascending). Throws idpl::Error(SEARCH_SPACE_TOO_LARGE).
void for_each_configuration(const FeatureModel& model, int clone_cap,
                            const std::function<void(const Configuration&)>& visit);

std::vector<Configuration> enumerate_configurations(const FeatureModel& model,
                                                    int clone_cap = kDefaultCloneCap);
std::uint64_t count_configurations(const FeatureModel& model, int clone_cap = kDefaultCloneCap);

// ---------------------------------------------------------------------------
// Lookup helpers

/// Flattened pre-order view of a model's tree.
class ModelIndex {
 public:
  struct Node {
    const Feature* feature = nullptr;
    int parent = -1;        // index into nodes(), -1 for the root
    int group = -1;         // index into the parent's groups
    GroupKind group_kind = GroupKind::and_;
    std::string path;       // Root/Child/...
  };

  explicit ModelIndex(const FeatureModel& model);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::optional<int> find(std::string_view name) const;
  const Node& at(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }

  /// Mandatory member of an and-group (the root counts as mandatory).
  bool is_mandatory(int i) const;

 private:
  void visit(const Feature& f, int parent, int group, GroupKind kind, const std::string& prefix);

  std::vector<Node> nodes_;
  std::map<std::string, int, std::less<>> by_name_;
};

std::string_view to_string(GroupKind k);
std::string_view to_string(ConstraintKind k);

}  // namespace idpl::fm
