#pragma once

#include <stdexcept>
#include <string>

namespace onioneco {

// Bad or missing input data (unreadable file, malformed record, empty corpus).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (bad flag combination, empty profile set).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric procedure could not produce a result (degenerate fit, singular system).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace onioneco
