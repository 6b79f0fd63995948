#include "mubound/error.hpp"

namespace mubound {

const char* error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::InvalidFamilyIndex: return "InvalidFamilyIndex";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::OrderError: return "OrderError";
        case ErrorCode::LimitTooLarge: return "LimitTooLarge";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InsufficientZeros: return "InsufficientZeros";
        case ErrorCode::TooManyZeros: return "TooManyZeros";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return 1;
        case ErrorCode::NonConvergence: return 3;
        case ErrorCode::OrderError:
        case ErrorCode::Io: return 4;
        default: return 2;
    }
}

}  // namespace mubound
