#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g4 {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string num_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
}  // namespace detail

/// A mathematical domain violation: log of a non-positive constant term,
/// division by a jet whose constant term vanishes, and so on. `op` names the
/// offending operation, `value` is the constant term that broke it.
struct DomainError : Error {
    std::string op;
    double value;

    DomainError(std::string op_, double value_)
        : Error(op_ + ": domain error (argument " + detail::num_str(value_) + ")"),
          op(std::move(op_)),
          value(value_) {}

    DomainError(std::string op_, double value_, std::size_t offset)
        : Error(op_ + ": domain error at offset " + std::to_string(offset) +
                " (argument " + detail::num_str(value_) + ")"),
          op(std::move(op_)),
          value(value_) {}
};

/// Syntax error in an expression. `offset` is the byte offset into the source.
struct ParseError : Error {
    std::size_t offset;

    ParseError(const std::string& what_, std::size_t offset_)
        : Error(what_ + " at offset " + std::to_string(offset_)), offset(offset_) {}
};

/// Malformed curve-spec file. `line` is 1-based.
struct FormatError : Error {
    std::size_t line;

    FormatError(const std::string& what_, std::size_t line_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace g4
