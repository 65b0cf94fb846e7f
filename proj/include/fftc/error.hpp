#pragma once

#include <stdexcept>
#include <string>

namespace fftc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct FieldMismatchError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DegenerateFormError : Error {
    using Error::Error;
};

struct NotProjectiveError : Error {
    using Error::Error;
};

// Raised when an algebra's semisimple quotient is not split over the ground
// field; carries the offending minimal polynomial in the message.
struct NonSplitError : Error {
    using Error::Error;
};

struct ResourceError : Error {
    using Error::Error;
};

}  // namespace fftc
