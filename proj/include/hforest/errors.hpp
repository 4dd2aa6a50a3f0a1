#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hforest {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSize : Error {
    using Error::Error;
};

struct NotAHypercube : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NonInvertibleBinding : Error {
    using Error::Error;
};

struct DegenerateResultant : Error {
    using Error::Error;
};

// Internal invariant violation: a ring division that must be exact was not.
struct InexactDivision : Error {
    using Error::Error;
};

struct MissingTags : Error {
    using Error::Error;
};

struct NotFound : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    BudgetExceeded(std::string msg, uint64_t required_, bool overflowed_)
        : Error(std::move(msg)), required(required_), overflowed(overflowed_) {}
    // Number of out-arc assignments the enumeration would have to visit.
    // When `overflowed` is set the true count does not fit in 64 bits.
    uint64_t required;
    bool overflowed;
};

}  // namespace hforest
