#include "fideal/ideal.hpp"

#include <algorithm>
#include <string>

namespace fideal {

MonomialIdeal::MonomialIdeal(int n) : n_(n) { check_ambient(n); }

MonomialIdeal::MonomialIdeal(int n, std::span<const Monomial> generators, Options options)
    : n_(n) {
  check_ambient(n);
  for (const auto& g : generators) {
    if (g.ambient() != n) {
      fail(ErrorCode::ambient_mismatch,
           "generator lives in k[x1..x" + std::to_string(g.ambient()) + "], ideal in k[x1..x" +
               std::to_string(n) + "]");
    }
    if (g.is_unit() && !options.allow_unit) {
      fail(ErrorCode::unit_generator, "the unit monomial 1 is not accepted as a generator");
    }
  }
  gens_ = minimalize(generators);
  reduced_ = gens_.size() != generators.size();
}

MonomialIdeal MonomialIdeal::from_index_lists(int n, const std::vector<std::vector<int>>& lists,
                                              Options options) {
  std::vector<Monomial> gens;
  gens.reserve(lists.size());
  for (const auto& l : lists) gens.push_back(Monomial::from_indices(n, l));
  return MonomialIdeal(n, gens, options);
}

MonomialIdeal MonomialIdeal::from_masks(int n, std::span<const Mask> masks, Options options) {
  std::vector<Monomial> gens;
  gens.reserve(masks.size());
  for (Mask m : masks) gens.emplace_back(n, m);
  return MonomialIdeal(n, gens, options);
}

std::vector<Mask> MonomialIdeal::generator_masks() const {
  std::vector<Mask> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

bool MonomialIdeal::has_full_generator() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_full(); });
}

bool MonomialIdeal::is_equigenerated() const noexcept {
  return !gens_.empty() && gens_.front().degree() == gens_.back().degree();
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient() != ideal.ambient()) {
    fail(ErrorCode::ambient_mismatch, "contains: monomial and ideal live in different rings");
  }
  const auto& gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(),
                     [&m](const Monomial& g) { return (g.support() & ~m.support()) == 0; });
}

DegreeExtremes degree_extremes(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorCode::zero_ideal, "degree extremes of the zero ideal are undefined");
  // Generators are sorted by degree.
  return {ideal.generators().front().degree(), ideal.generators().back().degree()};
}

MinimalPrimes minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorCode::zero_ideal, "the zero ideal has no minimal primes");
  std::vector<Mask> covers{0};
  for (Mask edge : ideal.generator_masks()) {
    std::vector<Mask> next;
    for (Mask t : covers) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (Mask rest = edge; rest; rest &= rest - 1) next.push_back(t | (rest & (~rest + 1)));
    }
    covers = minimalize_masks(std::move(next));
  }
  MinimalPrimes out;
  const int n = ideal.ambient();
  for (Mask t : covers) out.primes.emplace_back(n, t);
  // A unit generator has empty support and admits no cover at all.
  if (out.primes.empty()) return out;
  out.height = out.primes.front().degree();
  out.unmixed = out.primes.back().degree() == out.height;
  return out;
}

}  // namespace fideal
