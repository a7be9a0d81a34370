#ifndef BINOMID_ERRORS_HPP
#define BINOMID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binomid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact arithmetic
struct ZeroValue : Error {
    ZeroValue() : Error("inverse of exact zero") {}
    explicit ZeroValue(const std::string& m) : Error(m) {}
};
struct NotMonomial : Error {
    NotMonomial() : Error("value is not a single-grade monomial") {}
};

// special functions
struct GammaPole : Error {
    explicit GammaPole(const std::string& arg)
        : Error("Gamma pole at " + arg) {}
};
struct Undefined : Error {
    explicit Undefined(const std::string& m) : Error(m) {}
};
struct OffGrid : Error {
    explicit OffGrid(const std::string& m)
        : Error("argument off the half-integer grid: " + m) {}
};
struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& m) : Error(m) {}
};

// quadrature
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& m) : Error(m) {}
};
struct NumericPole : Error {
    explicit NumericPole(const std::string& m) : Error(m) {}
};

// evaluation
struct UnboundParam : Error {
    explicit UnboundParam(const std::string& name)
        : Error("unbound parameter: " + name) {}
};

// catalog / transform
struct UnknownId : Error {
    explicit UnknownId(const std::string& id)
        : Error("unknown identity id: " + id) {}
};
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& m) : Error(m) {}
};
struct ParityStructureUnsupported : Error {
    explicit ParityStructureUnsupported(const std::string& m) : Error(m) {}
};

// cli
struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(m) {}
};

}  // namespace binomid

#endif
