#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace idpl {

/// The four parts of an ABCD goal. These double as instance element names,
/// so they are fixed rather than catalog data.
inline constexpr std::string_view kAbcdParts[] = {"audience", "behavior", "condition", "degree"};

/// Editable vocabulary lists used by schema generation and instance
/// validation: Bloom's revised levels, Gagne's nine events and Merrill's
/// first principles.
struct PedagogyCatalog {
  std::vector<std::string> bloom_levels;
  std::vector<std::string> gagne_events;
  std::vector<std::string> merrill_principles;

  bool operator==(const PedagogyCatalog&) const = default;
};

const PedagogyCatalog& default_catalog();

/// Throws idpl::Error(CATALOG_FORMAT).
PedagogyCatalog catalog_from_json(std::string_view json_text);
std::string catalog_to_json(const PedagogyCatalog& catalog);

bool contains(const std::vector<std::string>& list, std::string_view value);

}  // namespace idpl
