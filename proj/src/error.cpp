#include "openlp/error.hpp"

namespace openlp {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse:
            return "parse";
        case ErrorCode::scope:
            return "scope";
        case ErrorCode::capacity:
            return "capacity";
    }
    return "unknown";
}

} // namespace openlp
