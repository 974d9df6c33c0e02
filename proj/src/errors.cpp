#include "hcf/errors.hpp"

namespace hcf {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Undecidable: return "Undecidable";
        case ErrorKind::FieldOverflow: return "FieldOverflow";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::OriginInRegion: return "OriginInRegion";
        case ErrorKind::CatalogueViolation: return "CatalogueViolation";
        case ErrorKind::InvalidDigit: return "InvalidDigit";
        case ErrorKind::InvalidWord: return "InvalidWord";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotInClosedShift: return "NotInClosedShift";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NotInDomain: return "NotInDomain";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::NotValid: return "NotValid";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::UnknownFigure: return "UnknownFigure";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Undecidable:
        case ErrorKind::FieldOverflow:
            return 2;
        case ErrorKind::UnknownFigure:
        case ErrorKind::Usage:
            return 3;
        default:
            return 1;
    }
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace hcf
