#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idpl::utf8 {

struct Decoded {
  char32_t codepoint = 0;
  std::size_t length = 0;  // bytes consumed; 0 means invalid sequence
};

/// Decodes the sequence starting at `pos`. Overlong forms, surrogates and
/// truncated sequences yield length 0.
Decoded decode(std::string_view s, std::size_t pos);

bool is_valid(std::string_view s);

std::size_t codepoint_count(std::string_view s);

/// Each codepoint as its own UTF-8 string. Invalid bytes are returned as
/// single-byte pieces.
std::vector<std::string> split_codepoints(std::string_view s);

std::string encode(char32_t cp);

}  // namespace idpl::utf8
