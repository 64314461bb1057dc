#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vdp {

enum class Errc {
  InvalidPrime,
  InvalidPrecision,
  PrecisionExceeded,
  DomainMismatch,
  NotCompatible,
  InvalidThreshold,
  WrongPrime,
  InvalidExponent,
  NotAUnit,
  InvalidSubstitution,
  TableLimitExceeded,
  FormatError,
  InvalidArgument,
};

const char* errc_name(Errc code);

/// Library error. FormatError carries the 1-based input line it refers to.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::uint64_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::uint64_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::uint64_t line_;
};

}  // namespace vdp
