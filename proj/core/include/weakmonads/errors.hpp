#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weakmonads {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WEAKMONADS_ERROR(Name)                  \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

WEAKMONADS_ERROR(DimensionMismatch);
WEAKMONADS_ERROR(FieldMismatch);
WEAKMONADS_ERROR(NotSquare);
WEAKMONADS_ERROR(NotIdempotent);
WEAKMONADS_ERROR(ShapeMismatch);
WEAKMONADS_ERROR(PreconditionFailed);
WEAKMONADS_ERROR(NotPreMonad);
WEAKMONADS_ERROR(NotMonadInEMW);
WEAKMONADS_ERROR(LeftLinearityFailed);
WEAKMONADS_ERROR(MonadMismatch);
WEAKMONADS_ERROR(BoundaryMismatch);
WEAKMONADS_ERROR(NotModule);
WEAKMONADS_ERROR(NotBimodule);
WEAKMONADS_ERROR(AxiomFailed);
WEAKMONADS_ERROR(EntwiningKindMismatch);
WEAKMONADS_ERROR(WellDefinednessFailed);
WEAKMONADS_ERROR(SharedAxiomFailed);
WEAKMONADS_ERROR(InvalidPresentation);
WEAKMONADS_ERROR(UnknownFamily);

#undef WEAKMONADS_ERROR

// Malformed input text; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}
    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

}  // namespace weakmonads
