#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fideal/complex.hpp"

namespace fideal {

/// The partition M_d = A ⊔ B ⊔ C ⊔ D for one degree d:
///   A: not in I and divides no generator
///   B: not in I and divides some generator
///   C: a minimal generator
///   D: in I but not a minimal generator
struct DegreePartition {
  int degree = 0;
  std::vector<Monomial> a, b, c, d;
};

struct PartitionSizes {
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const PartitionSizes&) const = default;
};

DegreePartition degree_partition(const MonomialIdeal& ideal, int d);

/// |A_d|..|D_d| for d = 0..n in one sweep over the subset lattice.
std::vector<PartitionSizes> partition_sizes(const MonomialIdeal& ideal);

enum class Method { fvector, partition, both };

#ifdef NDEBUG
inline constexpr Method kDefaultMethod = Method::partition;
#else
inline constexpr Method kDefaultMethod = Method::both;
#endif

/// Decides f(δ_F(I)) == f(δ_N(I)). Requires a proper nonzero ideal.
bool is_f_ideal(const MonomialIdeal& ideal, Method method = kDefaultMethod);

enum class Warning {
  full_monomial_generator,
  distinct_vertex_sets,
  dimension_mismatch,
};

const char* to_string(Warning w) noexcept;

struct FailedDegree {
  int degree;
  std::uint64_t a_size;
  std::uint64_t c_size;
};

struct FIdealCertificate {
  bool is_f_ideal = false;
  FVector facet_fvector;
  FVector nonface_fvector;
  std::vector<PartitionSizes> sizes;  // indexed by degree 0..n
  std::optional<FailedDegree> first_failure;
  std::vector<Warning> warnings;
};

FIdealCertificate certify(const MonomialIdeal& ideal);

enum class Check { pass, fail, vacuous };

const char* to_string(Check c) noexcept;

/// Items (i)-(v) of the f-vector necessary conditions for f-ideals.
struct NecessaryConditions {
  bool applicable = false;
  int alpha = 0;
  int omega = 0;
  FVector f;
  Check item1 = Check::vacuous;  // f_i = C(n,i+1) for i <= alpha-2
  Check item2 = Check::vacuous;  // 2 f_{alpha-1} >= C(n,alpha)
  Check item3 = Check::vacuous;  // 2 f_{omega-1} <= C(n,omega)
  Check item4 = Check::vacuous;  // alpha == omega => 2 f_{alpha-1} == C(n,alpha)
  Check item5 = Check::vacuous;  // dims equal omega-1 <= n-2

  bool all_pass() const noexcept;
};

NecessaryConditions necessary_conditions(const MonomialIdeal& ideal);

struct Implication {
  bool hypothesis = false;
  Check conclusion = Check::vacuous;
  std::uint64_t lhs = 0;  // the f-vector entry tested
  std::uint64_t rhs = 0;  // the threshold it was compared against
};

/// Generator-degree implications for mixed-degree f-ideals:
///   (i)  f_{alpha-1} > C(n,alpha) - n + alpha  => a generator of degree alpha+1
///   (ii) f_{omega-1} < omega                   => a generator of degree omega-1
struct GeneratorImplications {
  bool applicable = false;
  int alpha = 0;
  int omega = 0;
  Implication raises_alpha;
  Implication lowers_omega;
};

GeneratorImplications generator_degree_implications(const MonomialIdeal& ideal);

/// For I equigenerated in degree n-2 the three clauses
///   (i) I is an f-ideal, (ii) the dual is an f-ideal,
///   (iii) the dual is unmixed of height n-2 with C(n,2)/2 generators
///         and every variable divides one of its generators
/// are computed independently. Without the last condition (iii) also holds
/// for a triangle on three of four variables, which is not an f-ideal.
struct NMinus2Equivalence {
  bool applicable = false;
  bool ideal_is_f = false;
  bool dual_is_f = false;
  bool dual_unmixed_with_half_generators = false;
  bool dual_uses_every_variable = false;

  bool clause_iii() const noexcept { return dual_unmixed_with_half_generators && dual_uses_every_variable; }
  bool consistent() const noexcept { return ideal_is_f == dual_is_f && dual_is_f == clause_iii(); }
};

/// Throws ErrorCode::internal_disagreement if the clauses disagree.
NMinus2Equivalence equigenerated_n_minus_2_equivalence(const MonomialIdeal& ideal);

}  // namespace fideal
