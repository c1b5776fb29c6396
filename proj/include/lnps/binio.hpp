#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "lnps/errors.hpp"

namespace lnps::binio {

// little-endian primitives, explicit byte order regardless of host

inline void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

inline void write_u64(std::ostream& out, std::uint64_t v) {
  write_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  write_u32(out, static_cast<std::uint32_t>(v >> 32));
}

inline void write_f64(std::ostream& out, double v) {
  write_u64(out, std::bit_cast<std::uint64_t>(v));
}

inline void write_i8(std::ostream& out, std::int8_t v) {
  char b = static_cast<char>(v);
  out.write(&b, 1);
}

/// Tracks the byte offset so malformed streams can be reported precisely.
class Reader {
public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::size_t offset() const { return offset_; }

  void read_bytes(char* dst, std::size_t n, const char* what) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n)
      throw FormatError(std::string("truncated stream while reading ") + what, offset_);
    offset_ += n;
  }

  std::uint32_t read_u32(const char* what) {
    unsigned char b[4];
    read_bytes(reinterpret_cast<char*>(b), 4, what);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  }

  std::uint64_t read_u64(const char* what) {
    const std::uint64_t lo = read_u32(what);
    const std::uint64_t hi = read_u32(what);
    return lo | (hi << 32);
  }

  double read_f64(const char* what) {
    return std::bit_cast<double>(read_u64(what));
  }

  std::int8_t read_i8(const char* what) {
    char b;
    read_bytes(&b, 1, what);
    return static_cast<std::int8_t>(b);
  }

private:
  std::istream& in_;
  std::size_t offset_ = 0;
};

}  // namespace lnps::binio
