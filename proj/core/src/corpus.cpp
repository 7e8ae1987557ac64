#include "narrative/corpus.hpp"

#include "narrative/csv.hpp"
#include "narrative/error.hpp"
#include "narrative/text.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace narrative {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Opinion make_opinion(std::string id, std::string text) {
    Opinion op;
    op.id = std::move(id);
    op.text = std::move(text);
    op.char_count = count_scalars(op.text);
    return op;
}

void check_unique_ids(const std::vector<Opinion>& opinions) {
    std::unordered_set<std::string_view> seen;
    for (const auto& op : opinions) {
        if (!seen.insert(op.id).second) {
            throw ConfigError("duplicate opinion id: " + op.id);
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open corpus file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::vector<Opinion> parse_corpus_jsonl(std::string_view content) {
    std::vector<Opinion> opinions;
    std::size_t row = 0;
    for (const auto& line : split_lines(content)) {
        ++row;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw ConfigError("corpus jsonl: invalid json at row " + std::to_string(row));
        }
        for (const char* key : {"id", "text"}) {
            if (!j.contains(key) || !j[key].is_string()) {
                throw ConfigError("corpus jsonl: missing key \"" + std::string(key) +
                                  "\" at row " + std::to_string(row));
            }
        }
        opinions.push_back(make_opinion(j["id"].get<std::string>(), j["text"].get<std::string>()));
    }
    check_unique_ids(opinions);
    return opinions;
}

std::vector<Opinion> parse_corpus_csv(std::string_view content) {
    CsvTable table = parse_csv(content);
    auto find_col = [&](std::string_view name) -> std::size_t {
        for (std::size_t i = 0; i < table.header.size(); ++i) {
            if (trim(table.header[i]) == name) return i;
        }
        throw ConfigError("corpus csv: missing column \"" + std::string(name) + "\"");
    };
    std::size_t id_col = find_col("id");
    std::size_t text_col = find_col("text");

    std::vector<Opinion> opinions;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() == 1 && row[0].empty()) continue; // blank trailing line
        if (row.size() <= std::max(id_col, text_col)) {
            throw ConfigError("corpus csv: short row at row " + std::to_string(r + 1));
        }
        opinions.push_back(make_opinion(row[id_col], row[text_col]));
    }
    check_unique_ids(opinions);
    return opinions;
}

std::vector<Opinion> load_corpus(const std::string& path, CorpusFormat format) {
    std::string content = read_file(path);
    return format == CorpusFormat::jsonl ? parse_corpus_jsonl(content)
                                         : parse_corpus_csv(content);
}

std::string corpus_to_jsonl(const std::vector<Opinion>& opinions) {
    std::string out;
    for (const auto& op : opinions) {
        ordered_json j;
        j["id"] = op.id;
        j["text"] = op.text;
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
    if (text.empty()) throw ConfigError("split_sentences: empty text");

    auto cps = decode_utf8(text);
    std::vector<std::string> sentences;
    std::vector<char32_t> current;

    auto is_cjk_terminal = [](char32_t c) {
        return c == U'。' || c == U'！' || c == U'？'; // 。！？
    };
    auto is_ascii_terminal = [](char32_t c) { return c == U'.' || c == U'!' || c == U'?'; };

    for (std::size_t i = 0; i < cps.size(); ++i) {
        current.push_back(cps[i]);
        bool boundary = false;
        if (is_cjk_terminal(cps[i])) {
            boundary = true;
        } else if (is_ascii_terminal(cps[i])) {
            boundary = (i + 1 == cps.size()) || is_space_cp(cps[i + 1]);
        }
        if (boundary) {
            // trailing whitespace belongs to the sentence it follows,
            // keeping the split lossless under concatenation
            while (i + 1 < cps.size() && is_space_cp(cps[i + 1])) {
                current.push_back(cps[++i]);
            }
            sentences.push_back(encode_utf8(current));
            current.clear();
        }
    }
    if (!current.empty()) sentences.push_back(encode_utf8(current));
    return sentences;
}

CorpusStats descriptive_stats(const std::vector<Opinion>& opinions) {
    if (opinions.empty()) throw ConfigError("descriptive_stats: empty corpus");

    std::vector<double> counts;
    counts.reserve(opinions.size());
    for (const auto& op : opinions) counts.push_back(static_cast<double>(op.char_count));

    double sum = 0.0;
    for (double c : counts) sum += c;
    const double n = static_cast<double>(counts.size());
    const double mean = sum / n;

    double sq = 0.0;
    for (double c : counts) sq += (c - mean) * (c - mean);

    std::vector<double> sorted = counts;
    std::sort(sorted.begin(), sorted.end());

    CorpusStats stats;
    stats.mean = mean;
    stats.std_dev = std::sqrt(sq / n);
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.median = sorted[(sorted.size() - 1) / 2]; // lower middle for even n
    return stats;
}

std::string stats_to_json(const CorpusStats& stats) {
    ordered_json j;
    j["mean"] = stats.mean;
    j["std"] = stats.std_dev;
    j["min"] = stats.min;
    j["median"] = stats.median;
    j["max"] = stats.max;
    return j.dump(2) + "\n";
}

} // namespace narrative
