#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace idpl {

enum class Severity { error, warning };

/// A single finding from a parser, checker or validator.
///
/// `path` locates the finding inside the checked structure (a feature path
/// such as `Root/Goals/Bloom`, or an instance path such as
/// `lesson[0]/fact[1]/case[0]`). `line`/`column` are 1-based source
/// positions and are 0 when the finding is not tied to source text.
struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string path;
  int line = 0;
  int column = 0;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_error(std::string code, std::string message, std::string path = {});
Diagnostic make_warning(std::string code, std::string message, std::string path = {});

bool has_errors(const Diagnostics& diags);
std::size_t error_count(const Diagnostics& diags);

std::string_view to_string(Severity s);

/// `error[CODE] path (line:col): message`
std::string format(const Diagnostic& d);
std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

/// Operation-level failure carrying a stable code, e.g. INVALID_CONFIG.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  Error(std::string code, const std::string& message, Diagnostics details)
      : std::runtime_error(message), code_(std::move(code)), details_(std::move(details)) {}

  const std::string& code() const noexcept { return code_; }
  const Diagnostics& details() const noexcept { return details_; }

 private:
  std::string code_;
  Diagnostics details_;
};

}  // namespace idpl
