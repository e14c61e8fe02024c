#pragma once

#include <stdexcept>

namespace dss {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or parameter values (CLI flags, out-of-range requests).
struct UsageError : Error {
    using Error::Error;
};

// Malformed or inconsistent input data (files, point sequences, chains).
struct DataError : Error {
    using Error::Error;
};

// A floating-point evaluation landed too close to a rounding boundary
// to decide a lattice cell reliably.
struct PrecisionError : Error {
    using Error::Error;
};

// Fixed-width integer arithmetic overflowed.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace dss
