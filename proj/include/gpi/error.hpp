#pragma once

#include <stdexcept>
#include <string>

namespace gpi {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed the configured total-degree cap.
class cap_error : public error {
public:
    using error::error;
};

// Raised by the expression parser; carries a 1-based source position.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace gpi
