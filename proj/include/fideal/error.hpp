#pragma once

#include <stdexcept>
#include <string>

namespace fideal {

enum class ErrorCode {
  invalid_argument,
  ambient_mismatch,
  ambient_too_large,
  index_out_of_range,
  unit_generator,
  zero_ideal,
  unit_ideal,
  void_complex,
  invalid_beta,
  not_complementable,
  oracle_unavailable,
  inapplicable,
  internal_disagreement,
  overflow,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fideal
