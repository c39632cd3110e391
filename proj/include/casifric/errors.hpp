#ifndef CASIFRIC_ERRORS_HPP
#define CASIFRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace casifric {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible unit tags in arithmetic or conversion.
class UnitError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole (resonance, surface plasmon, static Drude limit).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A leading-order formula was asked to work outside its validity window.
class ValidityError : public Error {
public:
    using Error::Error;
};

/// Missing or inconsistent input data (material records, densities, flags).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Quadrature failure. Carries the best estimate when one exists.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double estimate = 0.0, double error = 0.0)
        : Error(what), estimate_(estimate), error_(error) {}

    double estimate() const noexcept { return estimate_; }
    double error() const noexcept { return error_; }

private:
    double estimate_;
    double error_;
};

}  // namespace casifric

#endif
