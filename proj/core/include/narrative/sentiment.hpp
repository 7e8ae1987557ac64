#pragma once

#include "narrative/corpus.hpp"
#include "narrative/gateway.hpp"
#include "narrative/prompts.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace narrative {

enum class Polarity { positive, negative };

std::string to_string(Polarity p);

struct PolarityScore {
    std::string opinion_id;
    double score{}; // in [0, 1]
    Polarity label{};
};

// First decimal literal in the reply, if any. "score: 0.8" -> 0.8.
std::optional<double> parse_score_reply(std::string_view reply);

// Renders the polarity prompt, completes through the cache, parses the
// reply and clamps it to [0,1]. Label is positive iff score > 0.5.
// Unparseable replies are re-queried up to policy.max_retries times, then
// reported as an extraction failure carrying the raw reply.
PolarityScore score_polarity(const Opinion& opinion, const PromptTemplate& prompt,
                             const CompletionParams& params, CompletionProvider& provider,
                             ReplayCache& cache, const RetryPolicy& policy = {});

// Total disjoint partition at the 0.5 threshold; a score of exactly 0.5
// labels negative.
std::pair<std::vector<std::string>, std::vector<std::string>>
split_by_polarity(const std::vector<PolarityScore>& scores);

// Bin i covers [i/bins, (i+1)/bins); the last bin is closed at 1.
std::vector<std::size_t> polarity_histogram(const std::vector<PolarityScore>& scores, int bins);

std::string scores_to_jsonl(const std::vector<PolarityScore>& scores);
std::vector<PolarityScore> scores_from_jsonl(std::string_view content);

std::string histogram_to_csv(const std::vector<std::size_t>& counts, int bins);

} // namespace narrative
