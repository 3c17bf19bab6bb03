#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fideal/ideal.hpp"

namespace fideal {

enum class SearchMode { automatic, exhaustive, sampled };

struct CensusOptions {
  std::uint64_t budget = 50'000'000;  // candidate ideals tested
  std::size_t witness_cap = 100;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  bool prune = true;           // equigenerated: only |S| = C(n,d)/2
  SearchMode mode = SearchMode::automatic;
  bool count_orbits = false;   // also count classes under variable permutation
};

/// Result of a census run. With budget_exhausted (or a sampled search) the
/// count is only a lower bound.
struct CensusRecord {
  int n = 0;
  std::optional<int> degree;  // nullopt for mixed-degree searches
  std::optional<int> gap;     // set by search_degree_gap
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;
  std::vector<MonomialIdeal> witnesses;
  std::optional<std::uint64_t> orbits;
  double elapsed_seconds = 0.0;
  bool budget_exhausted = false;
  bool sampled = false;

  bool complete() const noexcept { return !budget_exhausted && !sampled; }
};

/// V(n, d): f-ideals of k[x_1..x_n] equigenerated in degree d.
/// Requires 1 <= d <= n-1 and n <= 8.
CensusRecord enumerate_V(int n, int d, const CensusOptions& options = {});

/// Every f-ideal whose generators form an antichain of nonempty subsets of
/// {1..n}. Exhaustive for n <= 5 by default (n <= 6 when forced); otherwise
/// `budget` random ideals are sampled.
CensusRecord enumerate_all_fideals(int n, const CensusOptions& options = {});

struct PairingReport {
  std::uint64_t count = 0;       // |V(n, d)|
  std::uint64_t dual_count = 0;  // |V(n, n-d)|
  bool equal = false;
  bool bijection_checked = false;
  bool inconclusive = false;
};

/// Checks |V(n,d)| = |V(n,n-d)| and that the Newton dual maps one census
/// onto the other.
PairingReport verify_duality_pairing(int n, int d, const CensusOptions& options = {});

/// f-ideals with omega - alpha == gap.
CensusRecord search_degree_gap(int n, int gap, const CensusOptions& options = {});

/// A random square-free ideal: a random family of nonempty subsets,
/// minimalized. Never the zero ideal.
MonomialIdeal random_ideal(int n, std::mt19937_64& rng);

/// Lexicographically least generator mask list over all relabelings.
std::vector<Mask> canonical_form_under_permutation(const MonomialIdeal& ideal);

}  // namespace fideal
