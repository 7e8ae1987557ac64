#pragma once

#include <map>
#include <string>
#include <string_view>

namespace narrative {

// Prompt templates are plain UTF-8 text assets with {{placeholder}} slots.
// Lines starting with '#' are template comments and are stripped before
// rendering, so elided prompt passages can be marked without being sent.
struct PromptTemplate {
    std::string id;   // file stem, e.g. "stage1_en"
    std::string body; // comment lines already removed

    static PromptTemplate load(const std::string& path);
    static PromptTemplate from_string(std::string id, std::string_view raw);

    // Replaces every {{key}}; throws ConfigError on a slot with no value.
    std::string render(const std::map<std::string, std::string>& values) const;
};

} // namespace narrative
