#pragma once

#include <span>
#include <vector>

#include "fideal/monomial.hpp"

namespace fideal {

struct IdealOptions {
  bool allow_unit = false;
};

/// A square-free monomial ideal I of k[x_1..x_n], held through its unique
/// minimal generating set G(I). The ambient n is always explicit.
class MonomialIdeal {
 public:
  using Options = IdealOptions;

  /// The zero ideal of k[x_1..x_n].
  explicit MonomialIdeal(int n = 0);

  /// Minimalizes `generators`. Throws on a unit generator unless
  /// options.allow_unit is set, and on ambient mismatch.
  MonomialIdeal(int n, std::span<const Monomial> generators, Options options);
  MonomialIdeal(int n, std::span<const Monomial> generators)
      : MonomialIdeal(n, generators, Options{}) {}

  /// Builds from generator supports given as index lists.
  static MonomialIdeal from_index_lists(int n, const std::vector<std::vector<int>>& lists,
                                        Options options = {});
  static MonomialIdeal from_masks(int n, std::span<const Mask> masks, Options options = {});

  int ambient() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::vector<Mask> generator_masks() const;
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool has_full_generator() const noexcept;
  bool is_equigenerated() const noexcept;

  /// True when the constructor had to drop redundant or duplicate input.
  bool input_was_reduced() const noexcept { return reduced_; }

  bool operator==(const MonomialIdeal& other) const noexcept {
    return n_ == other.n_ && gens_ == other.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
  bool reduced_ = false;
};

/// m in I, i.e. some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

struct DegreeExtremes {
  int alpha;
  int omega;
};

/// (alpha(I), omega(I)); throws ErrorCode::zero_ideal on the zero ideal.
DegreeExtremes degree_extremes(const MonomialIdeal& ideal);

struct MinimalPrimes {
  std::vector<Monomial> primes;  // each prime <x_i : i in T> given by T
  int height = 0;
  bool unmixed = false;
};

/// Minimal vertex covers of the generator supports (Berge's incremental
/// transversal algorithm).
MinimalPrimes minimal_primes(const MonomialIdeal& ideal);

}  // namespace fideal
