#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace polarmod {

// Base class for every error raised by the library.  The `kind()` string is
// stable and machine-readable; the CLI maps it into report entries.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct ProfileMismatch : Error {
    explicit ProfileMismatch(const std::string& msg) : Error("ProfileMismatch", msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error("ShapeMismatch", msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error("NotHermitian", msg) {}
};

struct NegativeSpectrum : Error {
    explicit NegativeSpectrum(const std::string& msg) : Error("NegativeSpectrum", msg) {}
};

struct DefectSingular : Error {
    explicit DefectSingular(const std::string& msg) : Error("DefectSingular", msg) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error("NotSquare", msg) {}
};

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& msg) : Error("DomainMismatch", msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error("ZeroPolynomial", msg) {}
};

struct UnsupportedIrrationalRoot : Error {
    explicit UnsupportedIrrationalRoot(const std::string& msg)
        : Error("UnsupportedIrrationalRoot", msg) {}
};

// A submodule (range closure) fails to be an orthogonal summand.  The
// certificate is a point of the zero set lying in the closure of the support.
struct NotComplemented : Error {
    NotComplemented(const std::string& msg, std::string certificate)
        : Error("NotComplemented", msg), certificate(std::move(certificate)) {}
    std::string certificate;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("SchemaError", msg) {}
};

struct UnsupportedCommandForBackend : Error {
    explicit UnsupportedCommandForBackend(const std::string& msg)
        : Error("UnsupportedCommandForBackend", msg) {}
};

}  // namespace polarmod
