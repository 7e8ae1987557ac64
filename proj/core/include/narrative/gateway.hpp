#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace narrative {

struct CompletionParams {
    double temperature = 0.0;
    int max_output = 1024;
    std::string model_id;
};

struct CompletionRequest {
    std::string prompt_template_id;
    std::string rendered_prompt;
    CompletionParams params;
};

// Content hash of (template_id, rendered_prompt, params); 64 hex chars,
// stable across runs and platforms.
std::string request_digest(const CompletionRequest& request);

struct CacheEntry {
    std::string request_digest;
    std::string response_text;
    std::string recorded_at; // ISO-8601 UTC
};

class CompletionProvider {
public:
    virtual ~CompletionProvider() = default;
    // Returns the provider's text for the request. Throws ProviderError.
    virtual std::string complete(const CompletionRequest& request) = 0;
    virtual std::string name() const = 0;
};

// Strict replay: answers only from a recorded store, never the network.
class ReplayProvider : public CompletionProvider {
public:
    explicit ReplayProvider(std::unordered_map<std::string, std::string> responses)
        : responses_(std::move(responses)) {}

    std::string complete(const CompletionRequest& request) override;
    std::string name() const override { return "replay"; }

private:
    std::unordered_map<std::string, std::string> responses_;
};

struct HttpProviderSettings {
    std::string endpoint; // e.g. https://host/v1/chat/completions
    std::string auth_env; // environment variable holding the bearer token
    // Request/response JSON shape, configurable so the gateway is not
    // married to one vendor's field names.
    std::string model_field = "model";
    std::string prompt_field = "prompt";
    std::string temperature_field = "temperature";
    std::string max_output_field = "max_tokens";
    std::string response_text_pointer = "/choices/0/message/content";
    int timeout_seconds = 120;
};

std::unique_ptr<CompletionProvider> make_http_provider(HttpProviderSettings settings);

struct RetryPolicy {
    int max_retries = 2;       // total attempts <= max_retries + 1
    int base_delay_ms = 250;   // doubled per retry; 0 disables sleeping
};

// Single attempt against the provider. Empty replies are a provider error.
std::string complete(const CompletionRequest& request, CompletionProvider& provider);

// Retries retryable provider failures with exponential backoff.
std::string complete_with_retry(const CompletionRequest& request, CompletionProvider& provider,
                                const RetryPolicy& policy);

// JSONL-backed response cache. Writes are serialized behind a mutex
// (single-writer contract); reads after load are lock-free on the map.
class ReplayCache {
public:
    ReplayCache() = default;

    // Loads entries from a JSONL file; later lines for the same digest win.
    // Throws IntegrityError when a line's checksum does not match its content.
    static ReplayCache load(const std::string& path);
    static ReplayCache in_memory() { return ReplayCache{}; }

    // Opens (creating if needed) a cache that persists every put.
    static ReplayCache open_writable(const std::string& path);

    std::optional<std::string> lookup(const std::string& digest) const;
    void put(const std::string& digest, const std::string& response_text);
    std::size_t size() const { return entries_.size(); }

    std::unordered_map<std::string, std::string> snapshot() const { return entries_; }

private:
    std::unordered_map<std::string, std::string> entries_;
    std::string path_; // empty -> in-memory only
    mutable std::mutex write_mutex_;

public:
    ReplayCache(const ReplayCache& other) : entries_(other.entries_), path_(other.path_) {}
    ReplayCache(ReplayCache&& other) noexcept
        : entries_(std::move(other.entries_)), path_(std::move(other.path_)) {}
};

// Memoized completion: cache hit returns the stored text without touching
// the provider; a miss completes (with retries) and persists the reply.
std::string cached_complete(const CompletionRequest& request, CompletionProvider& provider,
                            ReplayCache& cache, const RetryPolicy& policy = {});

} // namespace narrative
