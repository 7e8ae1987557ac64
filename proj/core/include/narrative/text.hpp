#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace narrative {

// Count of Unicode scalar values in a UTF-8 string (not bytes).
std::size_t count_scalars(std::string_view utf8);

// Decode UTF-8 into code points. Invalid bytes decode as U+FFFD, one
// replacement per bad byte, so the function is total.
std::vector<char32_t> decode_utf8(std::string_view utf8);

// Encode a sequence of code points back to UTF-8.
std::string encode_utf8(const std::vector<char32_t>& codepoints);
void append_utf8(std::string& out, char32_t cp);

bool is_space_cp(char32_t cp);

// Strips every whitespace code point (ASCII whitespace and the ideographic
// space U+3000). This is the normalization used by the verbatim check:
// models reflow text with line breaks and stray spaces, and Japanese text
// carries no word boundaries, so deletion is the only reflow-proof rule.
std::string normalize_for_match(std::string_view utf8);

std::string trim(std::string_view s);

// Whole-string case-insensitive compare over ASCII letters only.
bool iequals_ascii(std::string_view a, std::string_view b);

std::vector<std::string> split_lines(std::string_view text);

} // namespace narrative
