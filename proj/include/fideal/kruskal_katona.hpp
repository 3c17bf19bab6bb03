#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fideal {

struct MacaulayTerm {
  std::uint64_t top;  // a_i
  int bottom;         // i
  bool operator==(const MacaulayTerm&) const = default;
};

/// a = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_k, k) with
/// a_j > a_{j-1} > ... > a_k >= k >= 1.
struct MacaulayExpansion {
  std::uint64_t value = 0;
  int index = 0;
  std::vector<MacaulayTerm> terms;
};

/// Greedy expansion. Throws ErrorCode::invalid_argument unless a >= 1, j >= 1.
MacaulayExpansion macaulay_expansion(std::uint64_t a, int j);

/// a^{(j)}: every term C(a_i, i) raised to C(a_i, i+1).
std::uint64_t macaulay_bound(std::uint64_t a, int j);

/// Kruskal-Katona: f_t <= f_{t-1}^{(t)} for 1 <= t <= d. `f` starts at
/// f_{-1}; returns false unless f_{-1} == 1 and every entry is positive.
bool kk_valid(std::span<const std::uint64_t> f);

/// Whether `f` is the f-vector of some complex, allowing the void complex
/// (empty vector) and trailing zeros.
bool is_fvector(std::span<const std::uint64_t> f);

struct ComplementVector {
  std::vector<std::uint64_t> raw;      // n+1 slots, entry i = C(n,i) - f_{n-i-1}
  std::vector<std::uint64_t> trimmed;  // trailing zeros removed
};

/// Throws ErrorCode::not_complementable if some f_t > C(n, t+1).
ComplementVector complement_fvector(std::span<const std::uint64_t> f, int n);

/// C(n,t+1) - [C(n,t+2) - f_{t+1}]^{(n-t-2)} <= f_t for 0 <= t <= d-1, with
/// 0^{(j)} = 0. False when f is not a candidate or exceeds C(n, t+1) somewhere.
bool kk_valid_dual(std::span<const std::uint64_t> f, int n);

inline constexpr int kOracleMaxVertices = 7;
inline constexpr int kOracleExhaustiveVertices = 5;

/// Decides realizability by construction: builds the compressed (colex)
/// family and checks it is closed under taking faces. For f_0 <= 5 the answer
/// is cross-checked against every complex on f_0 labeled vertices. Throws
/// ErrorCode::oracle_unavailable when f_0 > 7.
bool exists_complex_oracle(std::span<const std::uint64_t> f);

}  // namespace fideal
