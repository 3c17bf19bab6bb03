#include "fideal/duality.hpp"

#include <algorithm>
#include <string>

namespace fideal {

ExponentIdeal::ExponentIdeal(int n, std::span<const ExponentMonomial> generators) : n_(n) {
  check_ambient(n);
  for (const auto& g : generators) {
    if (g.ambient() != n) {
      fail(ErrorCode::ambient_mismatch, "generator has " + std::to_string(g.ambient()) +
                                            " exponents, expected " + std::to_string(n));
    }
  }
  gens_ = minimalize(generators);
}

ExponentIdeal ExponentIdeal::from_square_free(const MonomialIdeal& ideal) {
  std::vector<ExponentMonomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(ExponentMonomial::from_square_free(g));
  return ExponentIdeal(ideal.ambient(), gens);
}

bool ExponentIdeal::is_square_free() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const ExponentMonomial& g) { return g.is_square_free(); });
}

MonomialIdeal ExponentIdeal::to_square_free(MonomialIdeal::Options options) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) gens.push_back(g.to_square_free());
  return MonomialIdeal(n_, gens, options);
}

MonomialIdeal newton_dual(const MonomialIdeal& ideal, MonomialIdeal::Options options) {
  std::vector<Monomial> complements;
  complements.reserve(ideal.size());
  for (const auto& g : ideal.generators()) complements.push_back(g.complement());
  if (!options.allow_unit && std::any_of(complements.begin(), complements.end(),
                                         [](const Monomial& m) { return m.is_unit(); })) {
    fail(ErrorCode::unit_generator,
         "x1...x" + std::to_string(ideal.ambient()) + " is a generator, so the dual is the unit ideal");
  }
  return MonomialIdeal(ideal.ambient(), complements, options);
}

ExponentIdeal generalized_newton_dual(const ExponentIdeal& ideal, const BetaVector& beta) {
  const int n = ideal.ambient();
  if (static_cast<int>(beta.size()) != n) {
    fail(ErrorCode::invalid_beta, "beta has " + std::to_string(beta.size()) +
                                      " entries, expected " + std::to_string(n));
  }
  std::vector<ExponentMonomial> quotients;
  for (const auto& g : ideal.generators()) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      if (beta[l] < g[l]) {
        fail(ErrorCode::invalid_beta,
             "beta_" + std::to_string(l + 1) + " = " + std::to_string(beta[l]) +
                 " is below a generator exponent " + std::to_string(g[l]));
      }
      e[l] = beta[l] - g[l];
    }
    quotients.emplace_back(std::move(e));
  }
  return ExponentIdeal(n, quotients);
}

DivisorCount dual_divisor_count(const MonomialIdeal& ideal, int j) {
  const int n = ideal.ambient();
  if (j < -1 || j > n - 1) {
    fail(ErrorCode::index_out_of_range,
         "j = " + std::to_string(j) + " outside [-1, " + std::to_string(n - 1) + "]");
  }
  const auto gens = ideal.generator_masks();
  DivisorCount out{0, 0};
  for (Mask m : masks_of_degree(n, j + 1)) {
    if (std::any_of(gens.begin(), gens.end(), [m](Mask g) { return (m & ~g) == 0; })) ++out.lhs;
  }
  // The dual may be the unit ideal here; counting needs only its generators.
  std::vector<Mask> dual_gens;
  for (Mask g : gens) dual_gens.push_back(full_mask(n) & ~g);
  for (Mask m : masks_of_degree(n, n - j - 1)) {
    if (std::any_of(dual_gens.begin(), dual_gens.end(), [m](Mask g) { return (g & ~m) == 0; }))
      ++out.rhs;
  }
  return out;
}

}  // namespace fideal
