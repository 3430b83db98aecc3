#pragma once

#include <stdexcept>
#include <string>

namespace dtslice {

// Invalid or inconsistent configuration (bad keys, unknown tags, out-of-range settings).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Tensor/vector dimension disagreement.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string &msg) : std::invalid_argument(msg) {}
};

// Operation invoked in a state that does not admit it (step before reset, empty buffer, ...).
class StateError : public std::logic_error {
public:
    explicit StateError(const std::string &msg) : std::logic_error(msg) {}
};

// Unreadable or structurally invalid file content.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &msg, std::size_t offset)
        : std::runtime_error(msg + " (near byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string &msg) : std::runtime_error(msg), offset_(0) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace dtslice
