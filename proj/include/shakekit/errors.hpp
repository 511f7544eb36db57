#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shakekit {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sample (or coordinate pair) carried a NaN or infinite field.
class invalid_sample_error : public error {
public:
    using error::error;
};

/// Timestamps out of order: a stream fed backwards or a file row that
/// regressed in time. `line()` is the 1-based input line for file-sourced
/// violations and 0 for in-memory streams.
class ordering_error : public error {
public:
    explicit ordering_error(const std::string& what, std::size_t line = 0)
        : error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Invalid detector configuration or sweep grid.
class config_error : public error {
public:
    using error::error;
};

/// Invalid synthetic trace specification.
class spec_error : public error {
public:
    using error::error;
};

/// Missing or malformed file header.
class format_error : public error {
public:
    using error::error;
};

/// Malformed content inside a text document, with its 1-based line.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Filesystem read or write failure.
class io_error : public error {
public:
    using error::error;
};

} // namespace shakekit
