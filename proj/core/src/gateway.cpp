#include "narrative/gateway.hpp"

#include "narrative/digest.hpp"
#include "narrative/error.hpp"
#include "narrative/text.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace narrative {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string now_iso8601_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Checksum over digest + response so a hand-edited cache line is caught
// at load time.
std::string entry_checksum(const std::string& digest, const std::string& response) {
    return sha256_hex(digest + "\n" + response);
}

} // namespace

std::string request_digest(const CompletionRequest& request) {
    // Canonical form: a JSON array with a fixed field order. nlohmann
    // serializes doubles with the shortest round-trip representation,
    // which is stable across platforms.
    json canonical = json::array({
        request.prompt_template_id,
        request.rendered_prompt,
        request.params.model_id,
        request.params.temperature,
        request.params.max_output,
    });
    return sha256_hex(canonical.dump());
}

std::string ReplayProvider::complete(const CompletionRequest& request) {
    std::string digest = request_digest(request);
    auto it = responses_.find(digest);
    if (it == responses_.end()) {
        throw ProviderError("replay miss for digest " + digest, /*retryable=*/false);
    }
    return it->second;
}

std::string complete(const CompletionRequest& request, CompletionProvider& provider) {
    if (request.rendered_prompt.empty()) {
        throw ConfigError("completion request has an empty prompt");
    }
    std::string text = provider.complete(request);
    if (text.empty()) {
        throw ProviderError("provider " + provider.name() + " returned an empty response",
                            /*retryable=*/false);
    }
    return text;
}

std::string complete_with_retry(const CompletionRequest& request, CompletionProvider& provider,
                                const RetryPolicy& policy) {
    int delay_ms = policy.base_delay_ms;
    for (int attempt = 0;; ++attempt) {
        try {
            return complete(request, provider);
        } catch (const ProviderError& e) {
            if (!e.retryable() || attempt >= policy.max_retries) throw;
            if (delay_ms > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
                delay_ms *= 2;
            }
        }
    }
}

ReplayCache ReplayCache::load(const std::string& path) {
    ReplayCache cache;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open cache file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("request_digest") ||
            !j.contains("response_text")) {
            throw IntegrityError("cache line " + std::to_string(lineno) + " is malformed");
        }
        std::string digest = j["request_digest"].get<std::string>();
        std::string response = j["response_text"].get<std::string>();
        if (j.contains("checksum") &&
            j["checksum"].get<std::string>() != entry_checksum(digest, response)) {
            throw IntegrityError("cache line " + std::to_string(lineno) +
                                 " failed its checksum (digest " + digest + ")");
        }
        cache.entries_[digest] = std::move(response);
    }
    return cache;
}

ReplayCache ReplayCache::open_writable(const std::string& path) {
    ReplayCache cache;
    std::ifstream probe(path, std::ios::binary);
    if (probe.good()) {
        probe.close();
        cache = load(path);
    }
    cache.path_ = path;
    return cache;
}

std::optional<std::string> ReplayCache::lookup(const std::string& digest) const {
    auto it = entries_.find(digest);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ReplayCache::put(const std::string& digest, const std::string& response_text) {
    std::lock_guard<std::mutex> lock(write_mutex_);
    entries_[digest] = response_text;
    if (path_.empty()) return;
    ordered_json j;
    j["request_digest"] = digest;
    j["response_text"] = response_text;
    j["recorded_at"] = now_iso8601_utc();
    j["checksum"] = entry_checksum(digest, response_text);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw ConfigError("cache file not writable: " + path_);
    out << j.dump() << "\n";
}

std::string cached_complete(const CompletionRequest& request, CompletionProvider& provider,
                            ReplayCache& cache, const RetryPolicy& policy) {
    std::string digest = request_digest(request);
    if (auto hit = cache.lookup(digest)) return *hit;
    std::string text = complete_with_retry(request, provider, policy);
    cache.put(digest, text);
    return text;
}

} // namespace narrative
