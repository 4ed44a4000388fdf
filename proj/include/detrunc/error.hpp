#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace detrunc {

/// Machine-readable failure categories. The CLI prints them verbatim.
enum class Errc {
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  InfiniteField,
  NoSuchElement,
  DegreeTooLarge,
  ZeroScale,
  CharacteristicTooSmall,
  FieldTooSmall,
  FieldTooLarge,
  OrderTooSmall,
  NotSquare,
  IndexOutOfRange,
  KExceedsN,
  DimensionMismatch,
  DependentInputSet,
  PQExceedsRank,
  NotSubfamily,
  UnknownElement,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace detrunc
