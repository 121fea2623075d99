#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ohg {

// Stable, machine-parseable failure categories. The CLI prints the category
// name and maps it to a process exit code.
enum class ErrorCategory {
    InvalidArgument,
    OutOfRange,
    InvariantViolation,
    ResourceLimit,
    NoRoot,
    Syntax,
    Io,
};

std::string_view category_name(ErrorCategory c) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

}  // namespace ohg
