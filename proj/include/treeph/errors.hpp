#pragma once

#include <stdexcept>
#include <string>

namespace treeph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSimplex : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t line;
    ParseError(const std::string& msg, std::size_t line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotInSpan : Error {
    using Error::Error;
};

struct NotFullRank : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct ClassificationError : Error {
    using Error::Error;
};

struct InvalidDecomposition : Error {
    using Error::Error;
};

struct InvalidFiltration : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct OrientedReductionUndefined : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace treeph
