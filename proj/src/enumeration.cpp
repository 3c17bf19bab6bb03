#include "fideal/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "fideal/binomial.hpp"
#include "fideal/duality.hpp"
#include "fideal/f_ideal.hpp"
#include "fideal/lattice.hpp"

namespace fideal {

namespace {

using Clock = std::chrono::steady_clock;

struct BlockResult {
  std::uint64_t count = 0;
  std::vector<MonomialIdeal> witnesses;
  std::set<std::vector<Mask>> orbits;
};

// Splits [0, total) into contiguous blocks, runs `work` on each across
// `workers` threads and returns the results in block order, so the merged
// output never depends on the thread count.
std::vector<BlockResult> run_blocks(std::uint64_t total, unsigned workers,
                                    const std::function<BlockResult(std::uint64_t, std::uint64_t)>& work) {
  workers = std::max(1u, workers);
  const std::uint64_t block_count = std::min<std::uint64_t>(std::max<std::uint64_t>(total, 1), workers * 8ull);
  std::vector<BlockResult> results(block_count);
  auto bounds = [&](std::uint64_t b) { return total / block_count * b + std::min(b, total % block_count); };
  if (workers == 1) {
    for (std::uint64_t b = 0; b < block_count; ++b) results[b] = work(bounds(b), bounds(b + 1));
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t b = w; b < block_count; b += workers) results[b] = work(bounds(b), bounds(b + 1));
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

void merge(CensusRecord& record, std::vector<BlockResult>& blocks, const CensusOptions& options) {
  std::set<std::vector<Mask>> orbits;
  for (auto& b : blocks) {
    record.count += b.count;
    for (auto& w : b.witnesses) {
      if (record.witnesses.size() >= options.witness_cap) break;
      record.witnesses.push_back(std::move(w));
    }
    orbits.merge(b.orbits);
  }
  if (options.count_orbits) record.orbits = orbits.size();
}

void accept(BlockResult& block, const MonomialIdeal& ideal, const CensusOptions& options) {
  ++block.count;
  if (block.witnesses.size() < options.witness_cap) block.witnesses.push_back(ideal);
  if (options.count_orbits) block.orbits.insert(canonical_form_under_permutation(ideal));
}

// Lexicographic unranking of k-combinations of {0..m-1}.
std::vector<int> unrank_combination(std::uint64_t rank, int m, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  int x = 0;
  for (int p = 0; p < k; ++p) {
    while (true) {
      const std::uint64_t with_x = binomial_saturating(m - x - 1, k - p - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    c[static_cast<std::size_t>(p)] = x++;
  }
  return c;
}

bool next_combination(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

void check_census_ambient(int n) {
  if (n < 1 || n > 8) fail(ErrorCode::invalid_argument, "census needs 1 <= n <= 8");
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

CensusRecord enumerate_V(int n, int d, const CensusOptions& options) {
  check_census_ambient(n);
  if (d < 1 || d > n - 1) {
    fail(ErrorCode::invalid_argument,
         "V(n, d) needs 1 <= d <= n-1 (got n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
  }
  const auto start = Clock::now();
  CensusRecord record;
  record.n = n;
  record.degree = d;
  const auto layer = masks_of_degree(n, d);
  const int m = static_cast<int>(layer.size());

  if (options.prune) {
    // An equigenerated f-ideal has exactly C(n,d)/2 generators.
    if (m % 2 != 0) {
      if (options.count_orbits) record.orbits = 0;
      record.elapsed_seconds = seconds_since(start);
      return record;
    }
    const int k = m / 2;
    const std::uint64_t total = binomial_saturating(m, k);
    const std::uint64_t limit = std::min(total, options.budget);
    record.budget_exhausted = total > options.budget;
    record.candidates = limit;
    auto blocks = run_blocks(limit, options.workers, [&](std::uint64_t lo, std::uint64_t hi) {
      BlockResult block;
      if (lo >= hi) return block;
      auto combo = unrank_combination(lo, m, k);
      std::vector<Mask> gens(static_cast<std::size_t>(k));
      for (std::uint64_t r = lo; r < hi; ++r) {
        for (int i = 0; i < k; ++i) gens[static_cast<std::size_t>(i)] = layer[static_cast<std::size_t>(combo[static_cast<std::size_t>(i)])];
        MonomialIdeal ideal = MonomialIdeal::from_masks(n, gens);
        if (is_f_ideal(ideal, Method::partition)) accept(block, ideal, options);
        next_combination(combo, m);
      }
      return block;
    });
    merge(record, blocks, options);
  } else {
    if (m > 24) fail(ErrorCode::invalid_argument, "unpruned census limited to |M_d| <= 24");
    const std::uint64_t total = (std::uint64_t{1} << m) - 1;
    const std::uint64_t limit = std::min(total, options.budget);
    record.budget_exhausted = total > options.budget;
    record.candidates = limit;
    auto blocks = run_blocks(limit, options.workers, [&](std::uint64_t lo, std::uint64_t hi) {
      BlockResult block;
      std::vector<Mask> gens;
      for (std::uint64_t s = lo + 1; s <= hi; ++s) {
        gens.clear();
        for (int i = 0; i < m; ++i) {
          if ((s >> i) & 1u) gens.push_back(layer[static_cast<std::size_t>(i)]);
        }
        MonomialIdeal ideal = MonomialIdeal::from_masks(n, gens);
        if (is_f_ideal(ideal, Method::partition)) accept(block, ideal, options);
      }
      return block;
    });
    merge(record, blocks, options);
  }
  record.elapsed_seconds = seconds_since(start);
  return record;
}

namespace {

using Filter = std::function<bool(const MonomialIdeal&)>;

struct SearchState {
  std::set<std::vector<Mask>> seen;    // sampled mode only
  std::set<std::vector<Mask>> orbits;  // count_orbits only
};

void evaluate_batch(CensusRecord& record, std::vector<std::vector<Mask>>& batch, int n,
                    const CensusOptions& options, const Filter& keep, SearchState& state) {
  auto blocks = run_blocks(batch.size(), options.workers, [&](std::uint64_t lo, std::uint64_t hi) {
    BlockResult block;
    for (std::uint64_t i = lo; i < hi; ++i) {
      MonomialIdeal ideal = MonomialIdeal::from_masks(n, batch[i]);
      if (!is_f_ideal(ideal, Method::partition) || !keep(ideal)) continue;
      // Uncapped here; dedup and capping happen in order below.
      ++block.count;
      block.witnesses.push_back(std::move(ideal));
    }
    return block;
  });
  for (auto& b : blocks) {
    for (auto& w : b.witnesses) {
      if (record.sampled && !state.seen.insert(w.generator_masks()).second) continue;
      ++record.count;
      if (options.count_orbits) state.orbits.insert(canonical_form_under_permutation(w));
      if (record.witnesses.size() < options.witness_cap) record.witnesses.push_back(std::move(w));
    }
  }
  batch.clear();
}

CensusRecord search_all(int n, const CensusOptions& options, const Filter& keep) {
  if (n < 1) fail(ErrorCode::invalid_argument, "census needs n >= 1");
  const auto start = Clock::now();
  SearchMode mode = options.mode;
  if (mode == SearchMode::automatic) mode = n <= 5 ? SearchMode::exhaustive : SearchMode::sampled;
  if (mode == SearchMode::exhaustive && n > 6) {
    fail(ErrorCode::invalid_argument, "exhaustive antichain search is limited to n <= 6");
  }
  if (mode == SearchMode::sampled) check_census_ambient(n);

  CensusRecord record;
  record.n = n;
  record.sampled = mode == SearchMode::sampled;
  constexpr std::size_t kBatch = 1 << 14;
  std::vector<std::vector<Mask>> batch;
  SearchState state;

  if (mode == SearchMode::exhaustive) {
    AntichainWalker walker(nonempty_subsets(n));
    const bool finished = walker.walk([&](std::span<const Mask> chosen) {
      if (record.candidates >= options.budget) return false;
      ++record.candidates;
      batch.emplace_back(chosen.begin(), chosen.end());
      if (batch.size() == kBatch) evaluate_batch(record, batch, n, options, keep, state);
      return true;
    });
    record.budget_exhausted = !finished;
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < options.budget; ++i) {
      batch.push_back(random_ideal(n, rng).generator_masks());
      ++record.candidates;
      if (batch.size() == kBatch) evaluate_batch(record, batch, n, options, keep, state);
    }
  }
  evaluate_batch(record, batch, n, options, keep, state);
  if (options.count_orbits) record.orbits = state.orbits.size();
  record.elapsed_seconds = seconds_since(start);
  return record;
}

}  // namespace

CensusRecord enumerate_all_fideals(int n, const CensusOptions& options) {
  return search_all(n, options, [](const MonomialIdeal&) { return true; });
}

CensusRecord search_degree_gap(int n, int gap, const CensusOptions& options) {
  if (gap < 0) fail(ErrorCode::invalid_argument, "degree gap must be non-negative");
  auto record = search_all(n, options, [gap](const MonomialIdeal& ideal) {
    const auto [alpha, omega] = degree_extremes(ideal);
    return omega - alpha == gap;
  });
  record.gap = gap;
  return record;
}

PairingReport verify_duality_pairing(int n, int d, const CensusOptions& options) {
  CensusOptions full = options;
  full.witness_cap = std::numeric_limits<std::size_t>::max();
  full.count_orbits = false;
  const auto left = enumerate_V(n, d, full);
  const auto right = n - d == d ? left : enumerate_V(n, n - d, full);

  PairingReport report;
  report.count = left.count;
  report.dual_count = right.count;
  report.equal = left.count == right.count;
  report.inconclusive = !left.complete() || !right.complete();
  if (report.inconclusive) return report;

  std::set<std::vector<Mask>> targets;
  for (const auto& w : right.witnesses) targets.insert(w.generator_masks());
  std::set<std::vector<Mask>> image;
  bool into = true;
  for (const auto& w : left.witnesses) {
    auto masks = newton_dual(w).generator_masks();
    into = into && targets.count(masks) > 0;
    image.insert(std::move(masks));
  }
  report.bijection_checked = into && image.size() == left.witnesses.size() && image == targets;
  return report;
}

MonomialIdeal random_ideal(int n, std::mt19937_64& rng) {
  check_ambient(n);
  if (n == 0) fail(ErrorCode::invalid_argument, "random ideals need n >= 1");
  std::uniform_int_distribution<int> count_dist(1, 2 * n);
  std::uniform_int_distribution<int> degree_dist(1, n);
  const int count = count_dist(rng);
  std::vector<Mask> gens;
  for (int i = 0; i < count; ++i) {
    const auto layer = masks_of_degree(n, degree_dist(rng));
    std::uniform_int_distribution<std::size_t> pick(0, layer.size() - 1);
    gens.push_back(layer[pick(rng)]);
  }
  return MonomialIdeal::from_masks(n, gens);
}

std::vector<Mask> canonical_form_under_permutation(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  if (n > 8) fail(ErrorCode::invalid_argument, "orbit canonical forms are limited to n <= 8");
  const auto gens = ideal.generator_masks();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best;
  std::vector<Mask> image(gens.size());
  do {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Mask out = 0;
      for (int i = 0; i < n; ++i) {
        if ((gens[g] >> i) & 1u) out |= Mask{1} << perm[static_cast<std::size_t>(i)];
      }
      image[g] = out;
    }
    std::sort(image.begin(), image.end(), canonical_less);
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace fideal
