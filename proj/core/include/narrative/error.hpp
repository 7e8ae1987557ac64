#pragma once

#include <stdexcept>
#include <string>

namespace narrative {

// Error categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
    config,      // bad usage, bad config, bad input schema -> exit 1
    dependency,  // required upstream artifact missing       -> exit 2
    provider,    // transport / model endpoint failure       -> exit 3
    integrity,   // corrupted artifact or broken invariant   -> exit 4
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    int exit_code() const noexcept {
        switch (kind_) {
        case ErrorKind::config: return 1;
        case ErrorKind::dependency: return 2;
        case ErrorKind::provider: return 3;
        case ErrorKind::integrity: return 4;
        }
        return 1;
    }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(std::string msg) : Error(ErrorKind::config, std::move(msg)) {}
};

struct DependencyError : Error {
    explicit DependencyError(std::string msg) : Error(ErrorKind::dependency, std::move(msg)) {}
};

struct IntegrityError : Error {
    explicit IntegrityError(std::string msg) : Error(ErrorKind::integrity, std::move(msg)) {}
};

// Provider failures carry a retryable flag; transport errors are worth
// retrying, explicit rejections from the endpoint are not.
struct ProviderError : Error {
    ProviderError(std::string msg, bool retryable)
        : Error(ErrorKind::provider, std::move(msg)), retryable_(retryable) {}

    bool retryable() const noexcept { return retryable_; }

private:
    bool retryable_;
};

} // namespace narrative
