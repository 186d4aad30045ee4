#ifndef KMWEYL_ERRORS_HPP
#define KMWEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmweyl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: unknown labels, dimension mismatches, malformed config.
struct ValidationError : Error {
    using Error::Error;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownLabel : ValidationError {
    using ValidationError::ValidationError;
};

/// A computation could not be carried out (pole hit, no recurrence, ...).
struct ComputationError : Error {
    using Error::Error;
};

struct PoleEncountered : ComputationError {
    using ComputationError::ComputationError;
};

struct NoRecurrenceFound : ComputationError {
    using ComputationError::ComputationError;
};

struct IllConditioned : ComputationError {
    using ComputationError::ComputationError;
};

struct BasisTooLarge : ComputationError {
    using ComputationError::ComputationError;
};

struct InvalidFactorization : ValidationError {
    using ValidationError::ValidationError;
};

struct DegenerateEigenbasis : ComputationError {
    using ComputationError::ComputationError;
};

} // namespace kmweyl

#endif
