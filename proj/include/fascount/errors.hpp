#pragma once

#include <stdexcept>
#include <string>

namespace fascount {

// Malformed graph text. code() distinguishes the failure classes so callers
// and tests can react without matching message strings.
class ParseError : public std::runtime_error {
public:
  enum class Code {
    malformed_header,
    malformed_line,
    endpoint_out_of_range,
    loop,
    duplicate,
    wrong_kind,
  };

  ParseError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

private:
  Code code_;
};

// An operation refused to run because the instance exceeds a configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact-arithmetic consistency assertion failed (e.g. an interpolated
// coefficient came out fractional or negative). Signals a broken oracle or
// construction, never bad user input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace fascount
