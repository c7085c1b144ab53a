#pragma once

#include <stdexcept>
#include <string>

namespace dlang {

/// 1-based source position. Line/col 0 means "no position".
struct Pos {
    int line = 0;
    int col = 0;
    auto operator<=>(const Pos&) const = default;
};

/// Formats a diagnostic as "<file>:<line>:<col>: error: <message>".
inline std::string format_diag(const std::string& file, Pos pos, const std::string& message) {
    return file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.col) +
           ": error: " + message;
}

/// Base class for all toolchain errors that carry a source position.
class Error : public std::runtime_error {
public:
    Error(Pos pos, const std::string& message) : std::runtime_error(message), pos_(pos) {}
    Pos pos() const { return pos_; }

private:
    Pos pos_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class HierarchyError : public Error {
public:
    using Error::Error;
};

class SliceError : public Error {
public:
    using Error::Error;
};

} // namespace dlang
