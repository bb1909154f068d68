#include <sstream>

#include "idpl/featmodel.hpp"

namespace idpl::fm {
namespace {

void indent(std::ostringstream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

void write_card(std::ostringstream& os, const Cardinality& c) {
  if (c.is_clone()) os << " [" << c.min << ".." << c.max << ']';
}

void write_attribute(std::ostringstream& os, const AttributeDecl& a) {
  os << "attribute " << a.name << " : ";
  if (const auto* e = std::get_if<EnumDomain>(&a.domain)) {
    os << "enum {";
    for (std::size_t i = 0; i < e->literals.size(); ++i) {
      if (i) os << ", ";
      os << e->literals[i];
    }
    os << '}';
  } else if (const auto* r = std::get_if<IntRangeDomain>(&a.domain)) {
    os << "int [" << r->lo << ".." << r->hi << ']';
  } else {
    os << "text";
  }
  if (a.required) os << " required";
}

bool has_body(const Feature& f) { return !f.groups.empty() || !f.attributes.empty(); }

void write_feature(std::ostringstream& os, const Feature& f, std::string_view keyword, int depth);

void write_body(std::ostringstream& os, const Feature& f, int depth) {
  for (const auto& a : f.attributes) {
    indent(os, depth);
    write_attribute(os, a);
    os << '\n';
  }
  for (const auto& g : f.groups) {
    if (g.kind == GroupKind::and_) {
      for (const auto& c : g.children) {
        write_feature(os, c, c.variability == Variability::mandatory ? "mandatory" : "optional",
                      depth);
      }
      continue;
    }
    indent(os, depth);
    os << (g.kind == GroupKind::alternative ? "alternative {" : "or {");
    for (std::size_t i = 0; i < g.children.size(); ++i) {
      if (i) os << ", ";
      os << g.children[i].name;
    }
    os << "}\n";
    for (const auto& c : g.children) {
      if (c.cardinality.is_clone() || has_body(c)) write_feature(os, c, "optional", depth);
    }
  }
}

void write_feature(std::ostringstream& os, const Feature& f, std::string_view keyword, int depth) {
  indent(os, depth);
  os << keyword << ' ' << f.name;
  write_card(os, f.cardinality);
  if (has_body(f)) {
    os << " {\n";
    write_body(os, f, depth + 1);
    indent(os, depth);
    os << '}';
  }
  os << '\n';
}

}  // namespace

std::string serialize_model(const FeatureModel& model) {
  std::ostringstream os;
  os << "featuremodel " << model.name << " root " << model.root.name;
  write_card(os, model.root.cardinality);
  if (!has_body(model.root) && model.constraints.empty()) {
    os << '\n';
    return os.str();
  }
  os << " {\n";
  write_body(os, model.root, 1);
  for (const auto& c : model.constraints) {
    os << "  constraint " << c.lhs << ' ' << to_string(c.kind) << ' ' << c.rhs << '\n';
  }
  os << "}\n";
  return os.str();
}

}  // namespace idpl::fm
