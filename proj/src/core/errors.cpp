#include "fuchsian/error.hpp"

namespace fuchsian {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::NotFuchsian: return "NotFuchsian";
    case ErrorKind::NonRationalExponent: return "NonRationalExponent";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::NotInReducedForm: return "NotInReducedForm";
    case ErrorKind::ZeroPotential: return "ZeroPotential";
    case ErrorKind::EmptyBasis: return "EmptyBasis";
    case ErrorKind::NoInvariants: return "NoInvariants";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::DivisionByZeroFunction:
    case ErrorKind::UnknownKey:
    case ErrorKind::UnknownGroup:
    case ErrorKind::InvalidArgument:
        return true;
    default:
        return false;
    }
}

}  // namespace fuchsian
