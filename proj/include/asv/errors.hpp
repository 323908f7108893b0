#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asv {

// Raised for malformed input or violated preconditions (CLI exit status 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
public:
    ParseError(int line, const std::string& msg)
        : DomainError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Raised when a configurable size guard trips (CLI exit status 2).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per-call size guards. The extended game is exponential in |V|, so every
// entry point takes one of these instead of running unbounded.
struct Limits {
    std::size_t max_cycles = 100000;
    std::size_t max_extended_vertices = 20000;
    std::size_t max_memoryless = 65536;
};

}  // namespace asv
