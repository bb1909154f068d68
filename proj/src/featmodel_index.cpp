#include "idpl/featmodel.hpp"

namespace idpl::fm {

bool Feature::operator==(const Feature& o) const {
  return name == o.name && variability == o.variability && cardinality == o.cardinality &&
         groups == o.groups && attributes == o.attributes;
}

bool Group::operator==(const Group& o) const { return kind == o.kind && children == o.children; }

int Configuration::count_of(const std::string& feature) const {
  auto it = selections.find(feature);
  return it == selections.end() ? 0 : it->second;
}

ModelIndex::ModelIndex(const FeatureModel& model) {
  visit(model.root, -1, -1, GroupKind::and_, {});
}

void ModelIndex::visit(const Feature& f, int parent, int group, GroupKind kind,
                       const std::string& prefix) {
  const int self = static_cast<int>(nodes_.size());
  std::string path = prefix.empty() ? f.name : prefix + "/" + f.name;
  nodes_.push_back(Node{&f, parent, group, kind, path});
  by_name_.emplace(f.name, self);
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    for (const auto& child : f.groups[g].children) {
      visit(child, self, static_cast<int>(g), f.groups[g].kind, path);
    }
  }
}

std::optional<int> ModelIndex::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool ModelIndex::is_mandatory(int i) const {
  const Node& n = at(i);
  if (n.parent < 0) return true;
  return n.group_kind == GroupKind::and_ && n.feature->variability == Variability::mandatory;
}

std::string_view to_string(GroupKind k) {
  switch (k) {
    case GroupKind::and_: return "and";
    case GroupKind::alternative: return "alternative";
    case GroupKind::or_: return "or";
  }
  return "and";
}

std::string_view to_string(ConstraintKind k) {
  return k == ConstraintKind::requires_ ? "requires" : "excludes";
}

}  // namespace idpl::fm
