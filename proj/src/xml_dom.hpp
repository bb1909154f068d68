#pragma once

// Minimal element tree over expat. Only what the instance reader needs:
// element names, attributes, accumulated character data and positions.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idpl/diagnostic.hpp"

namespace idpl::xml {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;  // all character data directly inside this element
  int line = 0;
  int column = 0;

  const std::string* attribute(std::string_view key) const;
};

struct ParseResult {
  std::optional<Element> root;
  std::optional<Diagnostic> error;
};

ParseResult parse(std::string_view document);

std::string trim(std::string_view s);
std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

}  // namespace idpl::xml
