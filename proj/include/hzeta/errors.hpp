#pragma once

#include <stdexcept>
#include <string>

#include "hzeta/hpreal.hpp"

namespace hz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

struct NonAdmissible : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    using Error::Error;
};

// carries the best estimate reached before giving up
struct ToleranceNotReached : Error {
    ToleranceNotReached(const std::string& what, HPReal best, HPReal err)
        : Error(what), best_value(std::move(best)), best_error(std::move(err)) {}
    HPReal best_value;
    HPReal best_error;
};

}  // namespace hz
