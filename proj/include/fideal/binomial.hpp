#pragma once

#include <cstdint>

namespace fideal {

/// Exact C(n, k) in 64 bits. Returns 0 for k < 0 or k > n; throws
/// ErrorCode::overflow if the value does not fit.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Like binomial() but clamps to UINT64_MAX instead of throwing.
std::uint64_t binomial_saturating(std::int64_t n, std::int64_t k) noexcept;

}  // namespace fideal
