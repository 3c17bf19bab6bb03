#include "fideal/binomial.hpp"

#include <limits>

#include "fideal/error.hpp"

namespace fideal {

namespace {

// Multiplicative formula, exact at every step since the running product
// C(n-k+i, i) is an integer. Returns false on overflow.
bool binomial_impl(std::int64_t n, std::int64_t k, std::uint64_t& out) {
  if (k < 0 || n < 0 || k > n) {
    out = 0;
    return true;
  }
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  std::uint64_t out = 0;
  if (!binomial_impl(n, k, out)) {
    fail(ErrorCode::overflow,
         "C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
  }
  return out;
}

std::uint64_t binomial_saturating(std::int64_t n, std::int64_t k) noexcept {
  std::uint64_t out = 0;
  if (!binomial_impl(n, k, out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

}  // namespace fideal
