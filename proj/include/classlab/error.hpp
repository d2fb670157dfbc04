#ifndef CLASSLAB_ERROR_HPP
#define CLASSLAB_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace classlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation refused to run because it would exceed a configured bound
/// (element enumeration, coset index, matrix closure).
class BoundExceeded : public Error {
public:
  BoundExceeded(const std::string& what, std::uint64_t bound)
    : Error(what + " exceeds the bound of " + std::to_string(bound)), bound_(bound) {}

  std::uint64_t bound() const noexcept { return bound_; }

private:
  std::uint64_t bound_;
};

/// Syntax or name error in textual input. The offset is the 1-based
/// position of the offending character; end of input is length + 1.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t offset)
    : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A named construction failed its own consistency checks.
class ConstructionError : public Error {
public:
  using Error::Error;
};

} // namespace classlab

#endif
