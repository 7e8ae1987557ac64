#include "narrative/sentiment.hpp"

#include "narrative/csv.hpp"
#include "narrative/error.hpp"
#include "narrative/text.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace narrative {

namespace {
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;
} // namespace

std::string to_string(Polarity p) {
    return p == Polarity::positive ? "positive" : "negative";
}

std::optional<double> parse_score_reply(std::string_view reply) {
    // Scan for the first decimal literal; models decorate their numbers
    // with labels, so anything before the first digit is skipped.
    for (std::size_t i = 0; i < reply.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(reply[i]))) continue;
        std::size_t start = i;
        if (start > 0 && (reply[start - 1] == '-' || reply[start - 1] == '+')) --start;
        std::size_t end = i;
        while (end < reply.size() && std::isdigit(static_cast<unsigned char>(reply[end]))) ++end;
        if (end < reply.size() && reply[end] == '.') {
            ++end;
            while (end < reply.size() && std::isdigit(static_cast<unsigned char>(reply[end]))) ++end;
        }
        try {
            return std::stod(std::string(reply.substr(start, end - start)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

PolarityScore score_polarity(const Opinion& opinion, const PromptTemplate& prompt,
                             const CompletionParams& params, CompletionProvider& provider,
                             ReplayCache& cache, const RetryPolicy& policy) {
    if (opinion.text.empty()) {
        throw ConfigError("score_polarity: opinion " + opinion.id + " has empty text");
    }

    CompletionRequest request;
    request.prompt_template_id = prompt.id;
    request.rendered_prompt = prompt.render({{"text", opinion.text}});
    request.params = params;

    std::string reply;
    std::optional<double> value;
    for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
        reply = attempt == 0 ? cached_complete(request, provider, cache, policy)
                             : complete_with_retry(request, provider, policy);
        value = parse_score_reply(reply);
        if (value) break;
    }
    if (!value) {
        throw ProviderError("score_polarity: no numeric score in reply for opinion " +
                                opinion.id + "; raw reply: " + reply,
                            /*retryable=*/false);
    }

    PolarityScore score;
    score.opinion_id = opinion.id;
    score.score = std::clamp(*value, 0.0, 1.0);
    score.label = score.score > 0.5 ? Polarity::positive : Polarity::negative;
    return score;
}

std::pair<std::vector<std::string>, std::vector<std::string>>
split_by_polarity(const std::vector<PolarityScore>& scores) {
    std::vector<std::string> positive, negative;
    for (const auto& s : scores) {
        (s.score > 0.5 ? positive : negative).push_back(s.opinion_id);
    }
    return {std::move(positive), std::move(negative)};
}

std::vector<std::size_t> polarity_histogram(const std::vector<PolarityScore>& scores, int bins) {
    if (bins < 1) throw ConfigError("polarity_histogram: bins must be >= 1");
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    for (const auto& s : scores) {
        auto bin = static_cast<std::size_t>(s.score * bins);
        if (bin >= counts.size()) bin = counts.size() - 1; // score 1.0 closes the last bin
        ++counts[bin];
    }
    return counts;
}

std::string scores_to_jsonl(const std::vector<PolarityScore>& scores) {
    std::string out;
    for (const auto& s : scores) {
        ordered_json j;
        j["opinion_id"] = s.opinion_id;
        j["score"] = s.score;
        j["label"] = to_string(s.label);
        out += j.dump();
        out.push_back('\n');
    }
    return out;
}

std::vector<PolarityScore> scores_from_jsonl(std::string_view content) {
    std::vector<PolarityScore> scores;
    for (const auto& line : split_lines(content)) {
        if (trim(line).empty()) continue;
        json j = json::parse(line);
        PolarityScore s;
        s.opinion_id = j.at("opinion_id").get<std::string>();
        s.score = j.at("score").get<double>();
        s.label = j.at("label").get<std::string>() == "positive" ? Polarity::positive
                                                                 : Polarity::negative;
        scores.push_back(std::move(s));
    }
    return scores;
}

std::string histogram_to_csv(const std::vector<std::size_t>& counts, int bins) {
    std::string out = "bin_start,bin_end,count\n";
    for (int i = 0; i < bins; ++i) {
        char line[96];
        std::snprintf(line, sizeof(line), "%.6f,%.6f,%zu\n", static_cast<double>(i) / bins,
                      static_cast<double>(i + 1) / bins, counts[static_cast<std::size_t>(i)]);
        out += line;
    }
    return out;
}

} // namespace narrative
