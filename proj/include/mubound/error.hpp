#pragma once

#include <stdexcept>
#include <string>

namespace mubound {

enum class ErrorCode {
    OutOfDomain,
    DenominatorVanishes,
    DomainMismatch,
    InvalidFamilyIndex,
    NonConvergence,
    ParseError,
    OrderError,
    LimitTooLarge,
    OutOfRange,
    InsufficientZeros,
    TooManyZeros,
    Io,
};

// Single exception type for the library; the code selects the CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

const char* error_name(ErrorCode code) noexcept;

// 1 usage, 2 domain, 3 convergence, 4 I/O.
int exit_code(ErrorCode code) noexcept;

}  // namespace mubound
