// leadlag/errors.hpp
// Error types thrown across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leadlag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tick validation ---------------------------------------------------------

struct NonMonotoneTime : Error {
  std::size_t index;
  explicit NonMonotoneTime(std::size_t idx)
      : Error("timestamp not strictly increasing at index " + std::to_string(idx)),
        index(idx) {}
};

struct NonPositivePrice : Error {
  std::size_t index;
  explicit NonPositivePrice(std::size_t idx)
      : Error("non-positive price at index " + std::to_string(idx)), index(idx) {}
};

struct TooShort : Error {
  TooShort() : Error("tick series needs at least 2 observations") {}
};

// CSV ----------------------------------------------------------------------

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_no, const std::string& what_part)
      : Error("line " + std::to_string(line_no) + ": " + what_part), line(line_no) {}
};

// Estimators / theory ------------------------------------------------------

struct ZeroResolution : Error {
  ZeroResolution() : Error("activity grid resolution must be > 0") {}
};

struct WindowTooShort : Error {
  WindowTooShort() : Error("no window contains at least 2 ticks of each series") {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct InterleavingViolation : Error {
  std::size_t index;
  explicit InterleavingViolation(std::size_t idx)
      : Error("more than one opposite tick strictly inside interval starting at index " +
              std::to_string(idx)),
        index(idx) {}
};

// Simulation ---------------------------------------------------------------

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& msg) : Error(msg) {}
};

}  // namespace leadlag
