#include "narrative/error.hpp"
#include "narrative/gateway.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <nlohmann/json.hpp>

#include <cstdlib>

namespace narrative {

namespace {

using nlohmann::json;

struct ParsedUrl {
    std::string origin; // scheme://host[:port]
    std::string path;
};

ParsedUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("provider endpoint must be an http(s) URL: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

class HttpCompletionProvider : public CompletionProvider {
public:
    explicit HttpCompletionProvider(HttpProviderSettings settings)
        : settings_(std::move(settings)) {}

    std::string complete(const CompletionRequest& request) override {
        ParsedUrl url = split_url(settings_.endpoint);
        httplib::Client client(url.origin);
        client.set_connection_timeout(settings_.timeout_seconds, 0);
        client.set_read_timeout(settings_.timeout_seconds, 0);

        httplib::Headers headers;
        if (!settings_.auth_env.empty()) {
            const char* token = std::getenv(settings_.auth_env.c_str());
            if (!token) {
                throw ProviderError("auth environment variable not set: " + settings_.auth_env,
                                    /*retryable=*/false);
            }
            headers.emplace("Authorization", std::string("Bearer ") + token);
        }

        json body;
        body[settings_.model_field] = request.params.model_id;
        body[settings_.prompt_field] = request.rendered_prompt;
        body[settings_.temperature_field] = request.params.temperature;
        body[settings_.max_output_field] = request.params.max_output;

        auto res = client.Post(url.path, headers, body.dump(), "application/json");
        if (!res) {
            throw ProviderError("transport failure contacting " + settings_.endpoint + ": " +
                                    httplib::to_string(res.error()),
                                /*retryable=*/true);
        }
        if (res->status == 429 || res->status >= 500) {
            throw ProviderError("provider returned status " + std::to_string(res->status),
                                /*retryable=*/true);
        }
        if (res->status != 200) {
            throw ProviderError("provider rejected request with status " +
                                    std::to_string(res->status) + ": " + res->body,
                                /*retryable=*/false);
        }

        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded()) {
            throw ProviderError("provider returned unparseable JSON", /*retryable=*/false);
        }
        json::json_pointer ptr(settings_.response_text_pointer);
        if (!reply.contains(ptr) || !reply.at(ptr).is_string()) {
            throw ProviderError("provider response missing text at " +
                                    settings_.response_text_pointer,
                                /*retryable=*/false);
        }
        return reply.at(ptr).get<std::string>();
    }

    std::string name() const override { return "http:" + settings_.endpoint; }

private:
    HttpProviderSettings settings_;
};

} // namespace

std::unique_ptr<CompletionProvider> make_http_provider(HttpProviderSettings settings) {
    return std::make_unique<HttpCompletionProvider>(std::move(settings));
}

} // namespace narrative
