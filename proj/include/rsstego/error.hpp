#pragma once

#include <stdexcept>
#include <string>

namespace rsstego {

enum class Errc {
  invalid_argument,
  reducible_polynomial,
  non_primitive_generator,
  division_by_zero,
  length_mismatch,
  degenerate_params,
  budget_exceeded,
  message_too_large,
  bad_magic,
  corrupt_header,
  corrupt_payload,
  decode_failure,
  io_error,
};

const char* to_string(Errc code) noexcept;

/// Exception type for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::reducible_polynomial: return "ReduciblePolynomial";
    case Errc::non_primitive_generator: return "NonPrimitiveGenerator";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::degenerate_params: return "DegenerateParams";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::message_too_large: return "MessageTooLarge";
    case Errc::bad_magic: return "BadMagic";
    case Errc::corrupt_header: return "CorruptHeader";
    case Errc::corrupt_payload: return "CorruptPayload";
    case Errc::decode_failure: return "DecodeFailure";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace rsstego
