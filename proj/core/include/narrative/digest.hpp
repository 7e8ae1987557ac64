#pragma once

#include <string>
#include <string_view>

namespace narrative {

// SHA-256 of the input, as 64 lowercase hex characters.
std::string sha256_hex(std::string_view data);

// SHA-256 of a file's contents. Throws ConfigError if unreadable.
std::string sha256_file_hex(const std::string& path);

} // namespace narrative
