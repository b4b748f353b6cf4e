#pragma once

#include <stdexcept>
#include <string>

namespace hdbo {

// Error taxonomy. Preconditions throw InvalidArgument; the others mark
// conditions a caller may want to recover from (a crashed run is logged,
// not fatal to the experiment).

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SetupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedTest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_arg(bool cond, const std::string& msg) {
    if (!cond) throw InvalidArgument(msg);
}

}  // namespace hdbo
