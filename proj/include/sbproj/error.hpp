#pragma once

#include <stdexcept>

namespace sbproj {

// Parameter or configuration violation. The CLI maps these to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data. The CLI maps these to exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sbproj
