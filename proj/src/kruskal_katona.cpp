#include "fideal/kruskal_katona.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "fideal/binomial.hpp"
#include "fideal/error.hpp"
#include "fideal/lattice.hpp"

namespace fideal {

namespace {

// Largest t >= i with C(t, i) <= a, for a >= 1.
std::uint64_t largest_top(std::uint64_t a, int i) {
  if (i == 1) return a;
  std::uint64_t lo = static_cast<std::uint64_t>(i);  // C(i, i) = 1 <= a
  std::uint64_t hi = lo + 1;
  while (binomial_saturating(static_cast<std::int64_t>(hi), i) <= a) {
    lo = hi;
    hi = hi * 2;
  }
  // C(lo, i) <= a < C(hi, i)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (binomial_saturating(static_cast<std::int64_t>(mid), i) <= a) lo = mid;
    else hi = mid;
  }
  return lo;
}

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    fail(ErrorCode::overflow, "Macaulay bound overflows 64 bits");
  }
  return a + b;
}

// a^{(j)} extended by 0^{(j)} = 0.
std::uint64_t shifted_bound(std::uint64_t a, int j) {
  if (a == 0) return 0;
  return macaulay_bound(a, j);
}

bool is_candidate(std::span<const std::uint64_t> f) {
  return !f.empty() && f[0] == 1 &&
         std::none_of(f.begin(), f.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

MacaulayExpansion macaulay_expansion(std::uint64_t a, int j) {
  if (a == 0 || j <= 0) {
    fail(ErrorCode::invalid_argument, "Macaulay expansion needs a >= 1 and j >= 1 (got a = " +
                                          std::to_string(a) + ", j = " + std::to_string(j) + ")");
  }
  MacaulayExpansion e;
  e.value = a;
  e.index = j;
  std::uint64_t rest = a;
  for (int i = j; i >= 1 && rest > 0; --i) {
    const std::uint64_t top = largest_top(rest, i);
    e.terms.push_back({top, i});
    rest -= binomial(static_cast<std::int64_t>(top), i);
  }
  return e;
}

std::uint64_t macaulay_bound(std::uint64_t a, int j) {
  std::uint64_t sum = 0;
  for (const auto& term : macaulay_expansion(a, j).terms) {
    sum = add_checked(sum, binomial(static_cast<std::int64_t>(term.top), term.bottom + 1));
  }
  return sum;
}

bool kk_valid(std::span<const std::uint64_t> f) {
  if (!is_candidate(f)) return false;
  // f[t + 1] holds f_t.
  for (std::size_t t = 1; t + 1 < f.size(); ++t) {
    if (f[t + 1] > macaulay_bound(f[t], static_cast<int>(t))) return false;
  }
  return true;
}

bool is_fvector(std::span<const std::uint64_t> f) {
  std::size_t len = f.size();
  while (len > 0 && f[len - 1] == 0) --len;
  if (len == 0) return true;  // void complex
  return kk_valid(f.first(len));
}

ComplementVector complement_fvector(std::span<const std::uint64_t> f, int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "vertex count must be non-negative");
  // f_t sits at f[t + 1]; f_t = 0 past the end.
  auto entry = [&f](int t) -> std::uint64_t {
    const auto idx = static_cast<std::size_t>(t + 1);
    return idx < f.size() ? f[idx] : 0;
  };
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const int t = static_cast<int>(idx) - 1;
    if (f[idx] > binomial(n, t + 1)) {
      fail(ErrorCode::not_complementable, "f_" + std::to_string(t) + " = " + std::to_string(f[idx]) +
                                              " exceeds C(" + std::to_string(n) + ", " +
                                              std::to_string(t + 1) + ")");
    }
  }
  ComplementVector out;
  out.raw.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.raw[static_cast<std::size_t>(i)] = binomial(n, i) - entry(n - i - 1);
  out.trimmed = out.raw;
  while (!out.trimmed.empty() && out.trimmed.back() == 0) out.trimmed.pop_back();
  return out;
}

bool kk_valid_dual(std::span<const std::uint64_t> f, int n) {
  if (!is_candidate(f) || n < 0) return false;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx] > binomial(n, static_cast<std::int64_t>(idx))) return false;
  }
  const int d = static_cast<int>(f.size()) - 2;
  for (int t = 0; t <= d - 1; ++t) {
    const std::uint64_t f_t = f[static_cast<std::size_t>(t + 1)];
    const std::uint64_t f_next = f[static_cast<std::size_t>(t + 2)];
    const std::uint64_t bracket = binomial(n, t + 2) - f_next;
    const std::uint64_t bound = shifted_bound(bracket, n - t - 2);
    if (binomial(n, t + 1) > add_checked(f_t, bound)) return false;
  }
  return true;
}

namespace {

// Every f-vector of a complex on at most kOracleExhaustiveVertices vertices,
// gathered by walking all facet antichains.
const std::set<std::vector<std::uint64_t>>& small_fvectors() {
  static const std::set<std::vector<std::uint64_t>> table = [] {
    constexpr int n = kOracleExhaustiveVertices;
    std::set<std::vector<std::uint64_t>> out;
    out.insert({1});  // {∅}
    AntichainWalker walker(nonempty_subsets(n));
    walker.walk([&out](std::span<const Mask> facets) {
      std::vector<char> is_face(std::size_t{1} << n, 0);
      for (Mask facet : facets) {
        for (Mask s = facet;; s = (s - 1) & facet) {
          is_face[s] = 1;
          if (s == 0) break;
        }
      }
      std::vector<std::uint64_t> counts(n + 2, 0);
      for (std::size_t m = 0; m < is_face.size(); ++m) {
        if (is_face[m]) ++counts[static_cast<std::size_t>(popcount(static_cast<Mask>(m)))];
      }
      while (counts.back() == 0) counts.pop_back();
      out.insert(std::move(counts));
      return true;
    });
    return out;
  }();
  return table;
}

// Builds the compressed family (first f_t sets of each size in colex order)
// and checks that it is closed under removing a vertex.
bool compressed_witness(std::span<const std::uint64_t> f) {
  const std::size_t levels = f.size() - 1;  // sizes 1..levels
  if (levels == 0) return true;
  const int vertices = static_cast<int>(f[1]);
  std::vector<char> previous(std::size_t{1} << vertices, 0);
  previous[0] = 1;
  for (std::size_t k = 1; k <= levels; ++k) {
    const std::uint64_t want = f[k];
    if (want > binomial(vertices, static_cast<std::int64_t>(k))) return false;
    std::vector<char> current(previous.size(), 0);
    // Colex order on k-subsets is increasing mask order.
    auto layer = masks_of_degree(vertices, static_cast<int>(k));
    for (std::uint64_t i = 0; i < want; ++i) {
      const Mask s = layer[i];
      for (Mask rest = s; rest; rest &= rest - 1) {
        if (!previous[s & ~(rest & (~rest + 1))]) return false;
      }
      current[s] = 1;
    }
    previous = std::move(current);
  }
  return true;
}

}  // namespace

bool exists_complex_oracle(std::span<const std::uint64_t> f) {
  if (!is_candidate(f)) return false;
  const std::uint64_t vertices = f.size() >= 2 ? f[1] : 0;
  if (vertices > static_cast<std::uint64_t>(kOracleMaxVertices)) {
    fail(ErrorCode::oracle_unavailable, "realizability oracle handles at most " +
                                            std::to_string(kOracleMaxVertices) + " vertices");
  }
  const bool compressed = compressed_witness(f);
  if (vertices <= static_cast<std::uint64_t>(kOracleExhaustiveVertices)) {
    const bool exhaustive = small_fvectors().count(std::vector<std::uint64_t>(f.begin(), f.end())) > 0;
    if (exhaustive != compressed) {
      fail(ErrorCode::internal_disagreement, "compressed witness and exhaustive search disagree");
    }
    return exhaustive;
  }
  return compressed;
}

}  // namespace fideal
