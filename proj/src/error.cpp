#include "fideal/error.hpp"

namespace fideal {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::ambient_mismatch: return "ambient mismatch";
    case ErrorCode::ambient_too_large: return "ambient too large";
    case ErrorCode::index_out_of_range: return "index out of range";
    case ErrorCode::unit_generator: return "unit generator";
    case ErrorCode::zero_ideal: return "zero ideal";
    case ErrorCode::unit_ideal: return "unit ideal";
    case ErrorCode::void_complex: return "void complex";
    case ErrorCode::invalid_beta: return "invalid beta";
    case ErrorCode::not_complementable: return "not complementable";
    case ErrorCode::oracle_unavailable: return "oracle unavailable";
    case ErrorCode::inapplicable: return "inapplicable";
    case ErrorCode::internal_disagreement: return "internal disagreement";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::parse_error: return "parse error";
  }
  return "unknown";
}

}  // namespace fideal
