#pragma once

#include <string>
#include <vector>

namespace narrative {

struct Opinion {
    std::string id;
    std::string text;         // UTF-8
    std::size_t char_count{}; // Unicode scalar values, not bytes

    bool operator==(const Opinion&) const = default;
};

struct CorpusStats {
    double mean{};
    double std_dev{}; // population standard deviation
    double min{};
    double median{}; // lower middle element for even n
    double max{};
};

enum class CorpusFormat { csv, jsonl };

// Loads one Opinion per row/record, in file order. Required columns/keys:
// id, text. Throws ConfigError on schema problems (naming the row index)
// and on duplicate ids.
std::vector<Opinion> load_corpus(const std::string& path, CorpusFormat format);
std::vector<Opinion> parse_corpus_jsonl(std::string_view content);
std::vector<Opinion> parse_corpus_csv(std::string_view content);

std::string corpus_to_jsonl(const std::vector<Opinion>& opinions);

// Splits on terminal punctuation. The CJK delimiters 。！？ always end a
// sentence; ASCII .!? end one only when followed by whitespace or the end
// of the text. Whitespace after a delimiter stays attached to the sentence
// it follows, so concatenating the result reproduces the input exactly.
std::vector<std::string> split_sentences(std::string_view text);

CorpusStats descriptive_stats(const std::vector<Opinion>& opinions);

std::string stats_to_json(const CorpusStats& stats);

} // namespace narrative
