#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace evenparity {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Truncation discarded more amplitude than the operation tolerates.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A non-fatal condition, typically a truncated basis that captures
/// less than 1 - 1e-6 of a state's norm.
struct Warning {
    std::string source;
    std::string message;
    double captured_norm = 1.0;
};

/// Collects warnings from operations that accept a `Diagnostics*`.
/// Passing nullptr to those operations discards warnings. Not thread-safe;
/// use one instance per calling thread.
class Diagnostics {
public:
    void warn(std::string source, std::string message, double captured_norm = 1.0)
    {
        warnings_.push_back({std::move(source), std::move(message), captured_norm});
    }

    const std::vector<Warning>& warnings() const { return warnings_; }
    bool empty() const { return warnings_.empty(); }
    void clear() { warnings_.clear(); }

private:
    std::vector<Warning> warnings_;
};

inline void warn(Diagnostics* diag, std::string source, std::string message,
                 double captured_norm = 1.0)
{
    if (diag != nullptr) diag->warn(std::move(source), std::move(message), captured_norm);
}

} // namespace evenparity
