#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fideal/error.hpp"

namespace fideal {

inline constexpr int kMaxVariables = 20;

using Mask = std::uint32_t;

inline constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) noexcept { return __builtin_popcount(m); }

/// Throws unless 0 <= n <= kMaxVariables.
void check_ambient(int n);

/// A square-free monomial x_{i1}...x_{ij} in k[x_1..x_n], stored as the bitset
/// of its support (variable i at bit i-1). The same value doubles as a face of
/// a simplicial complex on {1..n}.
class Monomial {
 public:
  Monomial() = default;

  /// Throws if n is outside [0, kMaxVariables] or mask has bits above n.
  Monomial(int n, Mask support);

  static Monomial unit(int n) { return Monomial(n, 0); }
  static Monomial full(int n) { return Monomial(n, full_mask(n)); }
  static Monomial from_indices(int n, std::span<const int> indices);
  static Monomial from_indices(int n, std::initializer_list<int> indices) {
    return from_indices(n, std::span<const int>(indices.begin(), indices.size()));
  }

  int ambient() const noexcept { return n_; }
  Mask support() const noexcept { return bits_; }
  int degree() const noexcept { return popcount(bits_); }
  bool is_unit() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(n_); }
  bool has_variable(int i) const noexcept {
    return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1u);
  }

  /// (x_1...x_n) / m.
  Monomial complement() const noexcept {
    Monomial c;
    c.n_ = n_;
    c.bits_ = full_mask(n_) & ~bits_;
    return c;
  }

  /// Ascending variable indices.
  std::vector<int> indices() const;

  bool operator==(const Monomial&) const = default;

  /// Canonical order: ascending degree, then ascending bitset value.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    return bits_ <=> other.bits_;
  }

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

/// Canonical order on raw masks, matching Monomial::operator<=>.
inline bool canonical_less(Mask a, Mask b) noexcept {
  int da = popcount(a), db = popcount(b);
  return da != db ? da < db : a < b;
}

/// a | b. Throws ErrorCode::ambient_mismatch when the rings differ.
bool divides(const Monomial& a, const Monomial& b);

/// Divisibility-minimal elements of the list, deduplicated and canonically
/// ordered. All inputs must share one ambient ring.
std::vector<Monomial> minimalize(std::span<const Monomial> monomials);

/// Mask-level minimalization used on hot paths; output canonically ordered.
std::vector<Mask> minimalize_masks(std::vector<Mask> masks);

/// M_d: every square-free monomial of degree d, canonically ordered. Empty
/// when d is outside [0, n].
std::vector<Monomial> monomials_of_degree(int n, int d);

/// Mask form of monomials_of_degree.
std::vector<Mask> masks_of_degree(int n, int d);

/// A general monomial x_1^{e_1}...x_n^{e_n}.
class ExponentMonomial {
 public:
  ExponentMonomial() = default;
  explicit ExponentMonomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static ExponentMonomial from_square_free(const Monomial& m);

  int ambient() const noexcept { return static_cast<int>(exponents_.size()); }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  std::uint32_t operator[](std::size_t i) const { return exponents_.at(i); }
  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_square_free() const noexcept;

  /// Throws ErrorCode::invalid_argument unless every exponent is 0 or 1.
  Monomial to_square_free() const;

  /// Entrywise <=, i.e. this | other.
  bool divides(const ExponentMonomial& other) const;

  bool operator==(const ExponentMonomial&) const = default;
  /// Ascending degree, then lexicographic on exponents.
  std::strong_ordering operator<=>(const ExponentMonomial& other) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

std::vector<ExponentMonomial> minimalize(std::span<const ExponentMonomial> monomials);

}  // namespace fideal
