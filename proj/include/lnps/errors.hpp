#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnps {

/// Shape or dimension mismatch between operands.
class DimError : public std::invalid_argument {
public:
  explicit DimError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid argument value (bad mode index, empty input, out-of-range flag).
class ArgError : public std::invalid_argument {
public:
  explicit ArgError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed serialized stream; carries the byte offset of the defect.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Semantically invalid data (bad label, ragged row); carries a line number
/// when the source is line oriented (0 when not applicable).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Numerical failure (factorization breakdown after jitter escalation).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lnps
