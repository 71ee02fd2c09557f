#pragma once

#include <stdexcept>
#include <string>

namespace bipolkit {

// Bad flag combinations, unusable configuration. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable/malformed inputs and invariant violations. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bipolkit
