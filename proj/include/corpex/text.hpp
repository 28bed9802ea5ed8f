#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace corpex::text {

/// Case folding is ASCII-only; bytes >= 0x80 pass through unchanged so that
/// folding never depends on the process locale.
std::string ascii_lower(std::string_view s);
std::string ascii_upper(std::string_view s);
bool is_ascii_alpha(std::string_view s) noexcept;

/// A decoded code point and the number of bytes it occupied. Invalid UTF-8
/// decodes as U+FFFD with length 1.
struct CodePoint {
  char32_t value;
  std::size_t length;
};

CodePoint decode_utf8(std::string_view s, std::size_t offset) noexcept;

bool is_unicode_space(char32_t c) noexcept;
bool is_punctuation(char32_t c) noexcept;

std::string_view trim(std::string_view s) noexcept;

}  // namespace corpex::text
