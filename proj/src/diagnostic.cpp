#include "idpl/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace idpl {

Diagnostic make_error(std::string code, std::string message, std::string path) {
  return Diagnostic{Severity::error, std::move(code), std::move(message), std::move(path)};
}

Diagnostic make_warning(std::string code, std::string message, std::string path) {
  return Diagnostic{Severity::warning, std::move(code), std::move(message), std::move(path)};
}

bool has_errors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::size_t error_count(const Diagnostics& diags) {
  return static_cast<std::size_t>(std::count_if(
      diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::error; }));
}

std::string_view to_string(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

std::string format(const Diagnostic& d) {
  std::ostringstream os;
  os << to_string(d.severity) << '[' << d.code << ']';
  if (!d.path.empty()) os << ' ' << d.path;
  if (d.line > 0) os << " (" << d.line << ':' << d.column << ')';
  os << ": " << d.message;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) { return os << format(d); }

}  // namespace idpl
