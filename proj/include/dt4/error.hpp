#pragma once

#include <stdexcept>
#include <string>

namespace dt4 {

// Thrown when a computation cannot proceed (zero weight in a denominator,
// higher-order pole where a simple one is required, empty sign family, ...).
// The CLI maps these to exit code 3 with a structured diagnostic.
class ComputationError : public std::runtime_error {
public:
    ComputationError(std::string code, const std::string& what_arg)
        : std::runtime_error(code + ": " + what_arg), code_(std::move(code)) {}

    explicit ComputationError(std::string code)
        : std::runtime_error(code), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace dt4
