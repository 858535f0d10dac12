// Error types shared across the library. The CLI maps these onto exit codes
// (config 2, io 3, numeric 4).

#pragma once

#include <stdexcept>
#include <string>

namespace snash {

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snash
