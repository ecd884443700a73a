#pragma once

#include <stdexcept>
#include <string>

namespace truwb {

// Error taxonomy mirrors the CLI exit-code contract:
//   config/precondition problems -> exit 1
//   file/format problems         -> exit 2
//   numeric failures             -> exit 3
// Plain std::invalid_argument is treated like config_error.

class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace truwb
