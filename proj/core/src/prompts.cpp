#include "narrative/prompts.hpp"

#include "narrative/error.hpp"
#include "narrative/text.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace narrative {

PromptTemplate PromptTemplate::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open prompt template: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(std::filesystem::path(path).stem().string(), ss.str());
}

PromptTemplate PromptTemplate::from_string(std::string id, std::string_view raw) {
    PromptTemplate tpl;
    tpl.id = std::move(id);
    std::string body;
    for (const auto& line : split_lines(raw)) {
        if (!line.empty() && line.front() == '#') continue;
        body += line;
        body.push_back('\n');
    }
    // drop one trailing newline so templates do not grow on round trips
    if (!body.empty() && body.back() == '\n') body.pop_back();
    tpl.body = std::move(body);
    return tpl;
}

std::string PromptTemplate::render(const std::map<std::string, std::string>& values) const {
    std::string out;
    out.reserve(body.size());
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto open = body.find("{{", pos);
        if (open == std::string::npos) {
            out.append(body, pos, std::string::npos);
            break;
        }
        auto close = body.find("}}", open + 2);
        if (close == std::string::npos) {
            throw ConfigError("template " + id + ": unterminated {{placeholder}}");
        }
        out.append(body, pos, open - pos);
        std::string key = trim(body.substr(open + 2, close - open - 2));
        auto it = values.find(key);
        if (it == values.end()) {
            throw ConfigError("template " + id + ": no value for placeholder {{" + key + "}}");
        }
        out += it->second;
        pos = close + 2;
    }
    return out;
}

} // namespace narrative
