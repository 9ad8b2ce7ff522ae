#pragma once

#include <stdexcept>
#include <string>

namespace grpolab {

// Error taxonomy. The CLI maps these onto distinct exit codes:
//   config/input -> 1, numeric -> 2, capacity -> 3, I/O -> 4.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (e.g. stepping a terminal state).
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace grpolab
