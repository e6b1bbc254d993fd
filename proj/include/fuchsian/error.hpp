#pragma once

#include <stdexcept>
#include <string>

namespace fuchsian {

enum class ErrorKind {
    ZeroPolynomial,
    ZeroFunction,
    ZeroDivision,
    NotFuchsian,
    NonRationalExponent,
    DegenerateMap,
    OrderMismatch,
    UnknownGroup,
    NotInReducedForm,
    ZeroPotential,
    EmptyBasis,
    NoInvariants,
    SyntaxError,
    DivisionByZeroFunction,
    UnknownKey,
    InvalidArgument,
};

const char *error_kind_name(ErrorKind kind);

// Parse-type errors map to exit code 2 in the CLI; everything else is a
// domain error.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string &what, std::size_t position)
        : Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fuchsian
