#include "ohg/error.hpp"

namespace ohg {

std::string_view category_name(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::InvalidArgument: return "invalid_argument";
        case ErrorCategory::OutOfRange: return "out_of_range";
        case ErrorCategory::InvariantViolation: return "invariant_violation";
        case ErrorCategory::ResourceLimit: return "resource_limit";
        case ErrorCategory::NoRoot: return "no_root";
        case ErrorCategory::Syntax: return "syntax";
        case ErrorCategory::Io: return "io";
    }
    return "unknown";
}

}  // namespace ohg
