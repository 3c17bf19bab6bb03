#include "fideal/monomial.hpp"

#include <algorithm>
#include <string>

namespace fideal {

void check_ambient(int n) {
  if (n < 0 || n > kMaxVariables) {
    fail(ErrorCode::ambient_too_large,
         "ambient variable count " + std::to_string(n) + " outside [0, " +
             std::to_string(kMaxVariables) + "]");
  }
}

Monomial::Monomial(int n, Mask support) : n_(n), bits_(support) {
  check_ambient(n);
  if ((support & ~full_mask(n)) != 0) {
    fail(ErrorCode::index_out_of_range,
         "monomial uses a variable outside x1..x" + std::to_string(n));
  }
}

Monomial Monomial::from_indices(int n, std::span<const int> indices) {
  check_ambient(n);
  Mask bits = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      fail(ErrorCode::index_out_of_range,
           "variable index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    bits |= Mask{1} << (i - 1);
  }
  return Monomial(n, bits);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (has_variable(i)) out.push_back(i);
  }
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) {
    fail(ErrorCode::ambient_mismatch, "divides: monomials live in different rings");
  }
  return (a.support() & ~b.support()) == 0;
}

std::vector<Mask> minimalize_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> kept;
  kept.reserve(masks.size());
  // Canonical order puts every proper divisor before its multiples, so a
  // single pass against the already-kept prefix suffices.
  for (Mask m : masks) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [m](Mask g) { return (g & ~m) == 0; });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

std::vector<Monomial> minimalize(std::span<const Monomial> monomials) {
  if (monomials.empty()) return {};
  const int n = monomials.front().ambient();
  std::vector<Mask> masks;
  masks.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.ambient() != n) fail(ErrorCode::ambient_mismatch, "minimalize: mixed ambient rings");
    masks.push_back(m.support());
  }
  std::vector<Monomial> out;
  for (Mask m : minimalize_masks(std::move(masks))) out.emplace_back(n, m);
  return out;
}

std::vector<Mask> masks_of_degree(int n, int d) {
  check_ambient(n);
  std::vector<Mask> out;
  if (d < 0 || d > n) return out;
  if (d == 0) return {0};
  // Gosper's hack walks same-popcount masks in increasing order.
  Mask m = full_mask(d);
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  for (Mask m : masks_of_degree(n, d)) out.emplace_back(n, m);
  return out;
}

ExponentMonomial ExponentMonomial::from_square_free(const Monomial& m) {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(m.ambient()), 0);
  for (int i = 1; i <= m.ambient(); ++i) e[i - 1] = m.has_variable(i) ? 1 : 0;
  return ExponentMonomial(std::move(e));
}

std::uint64_t ExponentMonomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

bool ExponentMonomial::is_unit() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool ExponentMonomial::is_square_free() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e <= 1; });
}

Monomial ExponentMonomial::to_square_free() const {
  if (!is_square_free()) fail(ErrorCode::invalid_argument, "monomial is not square-free");
  Mask bits = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i]) bits |= Mask{1} << i;
  }
  return Monomial(ambient(), bits);
}

bool ExponentMonomial::divides(const ExponentMonomial& other) const {
  if (ambient() != other.ambient()) {
    fail(ErrorCode::ambient_mismatch, "divides: monomials live in different rings");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

std::strong_ordering ExponentMonomial::operator<=>(const ExponentMonomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return exponents_ <=> other.exponents_;
}

std::vector<ExponentMonomial> minimalize(std::span<const ExponentMonomial> monomials) {
  std::vector<ExponentMonomial> sorted(monomials.begin(), monomials.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ExponentMonomial> kept;
  for (const auto& m : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&m](const ExponentMonomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

}  // namespace fideal
