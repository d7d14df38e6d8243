#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iipm {

// Base class for all validation and usage errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadLength : Error {
  using Error::Error;
};

// Boundary values, probability vectors, or masses not normalized.
struct NotNormalized : Error {
  using Error::Error;
};

// Monotonicity violated; carries a witness pair subset_a ⊂ subset_b with
// value(subset_a) > value(subset_b).
struct NotMonotone : Error {
  NotMonotone(const std::string& msg, std::uint32_t a, std::uint32_t b)
      : Error(msg), subset_a(a), subset_b(b) {}
  std::uint32_t subset_a;
  std::uint32_t subset_b;
};

struct NotNormalizedMass : Error {
  using Error::Error;
};

struct SpaceMismatch : Error {
  using Error::Error;
};

// An exhaustive lattice sweep was requested for a space above the guard.
struct SpaceTooLarge : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

struct PointsNotSorted : Error {
  using Error::Error;
};

struct DimMismatch : Error {
  using Error::Error;
};

struct TooFewSamples : Error {
  using Error::Error;
};

struct BadRate : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_number)
      : Error(msg + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  std::size_t line;
};

struct InconsistentShape : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace iipm
