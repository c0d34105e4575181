// errors.hpp: Exception types shared by every lindscope module

#pragma once

#include <stdexcept>
#include <string>

namespace lindscope {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes do not agree.
struct DimensionError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

// Eigensolver failure or an internal consistency check that did not hold.
struct NumericalError : Error {
    using Error::Error;
};

// Matrix exponential requested outside the accurate range; rescale the time grid.
struct RangeError : Error {
    using Error::Error;
};

// Invalid LindbladModel (non-Hermitian Hamiltonian, shape mismatch, dimension cap).
struct ModelError : Error {
    using Error::Error;
};

// Invalid user configuration: unknown model kind, bad parameter, malformed file.
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace lindscope
