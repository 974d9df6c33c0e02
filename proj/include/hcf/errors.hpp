#pragma once

#include <stdexcept>
#include <string>

namespace hcf {

enum class ErrorKind {
    Undecidable,
    FieldOverflow,
    FieldMismatch,
    OriginInRegion,
    CatalogueViolation,
    InvalidDigit,
    InvalidWord,
    PreconditionViolated,
    ZeroInput,
    NotInClosedShift,
    ZeroDenominator,
    NotInDomain,
    InternalInvariantViolation,
    NotValid,
    NotRegular,
    LengthMismatch,
    HypothesisViolated,
    UnknownFigure,
    Usage,
};

const char* kind_name(ErrorKind k);

// 1 domain error, 2 undecidable at current precision/field, 3 usage error.
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

}  // namespace hcf
