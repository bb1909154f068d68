#include "idpl/idinstance.hpp"

namespace idpl::inst {

AssetRef::AssetRef(std::string path, MediaKind kind) : path_(std::move(path)), kind_(kind) {
  if (!is_valid_path(path_)) {
    throw Error("INVALID_ASSET_PATH",
                "asset path '" + path_ + "' must be relative without '..' segments");
  }
}

bool AssetRef::is_valid_path(std::string_view path) {
  if (path.empty()) return false;
  if (path.front() == '/' || path.front() == '\\') return false;
  if (path.size() >= 2 && path[1] == ':') return false;  // drive letter
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find_first_of("/\\", start);
    if (end == std::string_view::npos) end = path.size();
    if (path.substr(start, end - start) == "..") return false;
    start = end + 1;
  }
  return true;
}

bool ProcessNode::operator==(const ProcessNode& o) const {
  return title == o.title && frame == o.frame && principle == o.principle && children == o.children;
}

std::string_view to_string(ProcessLevel level) {
  switch (level) {
    case ProcessLevel::play: return "play";
    case ProcessLevel::act: return "act";
    case ProcessLevel::scene: return "scene";
    case ProcessLevel::instruction: return "instruction";
  }
  return "?";
}

std::string_view to_string(ResourceKind k) {
  switch (k) {
    case ResourceKind::rule: return "rule";
    case ResourceKind::model: return "model";
    case ResourceKind::theory: return "theory";
  }
  return "?";
}

}  // namespace idpl::inst
