#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace accinfo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct NotPsd : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct InvalidEnsemble : Error {
    using Error::Error;
};

struct EmptyPovm : Error {
    using Error::Error;
};

/// Text-format error. `line` is 1-based (0 when the input is a bare token or
/// a single matrix line); `offset` is the 0-based byte offset within that line.
class ParseError : public Error {
  public:
    ParseError(std::string reason, std::size_t line, std::size_t offset)
        : Error(describe(reason, line, offset)),
          reason_(std::move(reason)),
          line_(line),
          offset_(offset) {}

    const std::string& reason() const { return reason_; }
    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

  private:
    static std::string describe(const std::string& reason, std::size_t line,
                                std::size_t offset) {
        std::string s;
        if (line > 0) s += "line " + std::to_string(line) + ", ";
        s += "offset " + std::to_string(offset) + ": " + reason;
        return s;
    }

    std::string reason_;
    std::size_t line_;
    std::size_t offset_;
};

struct CountMismatch : ParseError {
    using ParseError::ParseError;
};

}  // namespace accinfo
