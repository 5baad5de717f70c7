#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a series that is zero up to its recorded precision.
struct ZeroDivisorError : Error {
    using Error::Error;
};

// Request for coefficients beyond what an operand knows.
struct PrecisionLossError : Error {
    using Error::Error;
};

// An infinite sum or product whose minimal exponents do not grow.
struct NonConvergentError : Error {
    using Error::Error;
};

// A bilateral denominator 1 - q^d vanishes identically.
struct PolarParametersError : Error {
    using Error::Error;
};

// A construction would require half-integer powers of q.
struct NonIntegerExponentError : Error {
    using Error::Error;
};

struct WrongRelativeParameterError : Error {
    using Error::Error;
};

struct UnknownPairError : Error {
    using Error::Error;
};

struct UnknownIdentityError : Error {
    using Error::Error;
};

struct UnknownSeriesError : Error {
    using Error::Error;
};

struct BadParamsError : Error {
    using Error::Error;
};

}  // namespace qseries
