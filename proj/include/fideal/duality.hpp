#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fideal/ideal.hpp"

namespace fideal {

/// A monomial ideal with arbitrary exponents, held through its minimal
/// generators. Only the generalized dual needs this; everything else in the
/// library is square-free.
class ExponentIdeal {
 public:
  ExponentIdeal(int n, std::span<const ExponentMonomial> generators);
  static ExponentIdeal from_square_free(const MonomialIdeal& ideal);

  int ambient() const noexcept { return n_; }
  const std::vector<ExponentMonomial>& generators() const noexcept { return gens_; }
  bool is_square_free() const noexcept;

  /// Throws ErrorCode::invalid_argument unless square-free.
  MonomialIdeal to_square_free(MonomialIdeal::Options options = {}) const;

  bool operator==(const ExponentIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<ExponentMonomial> gens_;
};

using BetaVector = std::vector<std::uint32_t>;

/// Newton complementary dual <(x_1...x_n)/m : m in G(I)>. A full-monomial
/// generator yields the unit ideal, which is rejected with
/// ErrorCode::unit_generator unless options.allow_unit is set.
MonomialIdeal newton_dual(const MonomialIdeal& ideal, MonomialIdeal::Options options = {});

/// <x^beta / m : m in G(I)>. Throws ErrorCode::invalid_beta naming the first
/// coordinate where beta fails to dominate a generator.
ExponentIdeal generalized_newton_dual(const ExponentIdeal& ideal, const BetaVector& beta);

struct DivisorCount {
  std::uint64_t lhs;  // degree j+1 square-free divisors of some generator
  std::uint64_t rhs;  // degree n-j-1 square-free monomials in the dual
};

/// Both sides of the complement bijection for -1 <= j <= n-1.
DivisorCount dual_divisor_count(const MonomialIdeal& ideal, int j);

}  // namespace fideal
