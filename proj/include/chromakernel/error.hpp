#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ck {

enum class ErrorKind {
  DuplicateArc,
  IntraPartArc,
  ColorOutOfRange,
  PartsNotPartition,
  LoopArc,
  TooManyColors,
  VertexOutOfRange,
  WrongPartCount,
  NotSemicomplete,
  TooLarge,
  InvalidParams,
  BudgetExceeded,
  InvalidCampaign,
  CorruptCheckpoint,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers can dispatch
// without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ck
