#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rr {

enum class ErrorCode {
  MalformedInput,
  ForeignSymbol,
  InfiniteLanguage,
  FiniteLanguage,
  NoHashSymbol,
  NotInImage,
  EmptySecondComponent,
  BlockTooSmall,
  NotBinaryAlphabet,
  PreconditionFailed,
  BadConfig,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is what callers switch on;
/// the message is for humans.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace rr
