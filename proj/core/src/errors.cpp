#include "oscloc/errors.hpp"

namespace oscloc {

const char* to_string(ErrorCategory category) noexcept {
    switch (category) {
    case ErrorCategory::config: return "config";
    case ErrorCategory::numerical: return "numerical";
    case ErrorCategory::statistical: return "statistical";
    }
    return "unknown";
}

int exit_code(ErrorCategory category) noexcept {
    switch (category) {
    case ErrorCategory::config: return 2;
    case ErrorCategory::numerical: return 3;
    case ErrorCategory::statistical: return 4;
    }
    return 1;
}

}  // namespace oscloc
