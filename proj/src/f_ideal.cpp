#include "fideal/f_ideal.hpp"

#include <algorithm>
#include <string>

#include "fideal/binomial.hpp"
#include "fideal/duality.hpp"

namespace fideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorCode::zero_ideal, "the zero ideal has no facet complex");
  if (ideal.is_unit()) fail(ErrorCode::unit_ideal, "the unit ideal has no non-face complex");
}

enum class Class : char { a, b, c, d };

// Classification of every mask in {0..2^n-1}.
std::vector<Class> classify(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  const std::size_t size = std::size_t{1} << n;
  std::vector<char> is_gen(size, 0), in_ideal(size, 0), divides_gen(size, 0);
  for (Mask g : ideal.generator_masks()) is_gen[g] = in_ideal[g] = divides_gen[g] = 1;
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < size; ++m) {
      if (m & bit) {
        in_ideal[m] |= in_ideal[m ^ bit];
      } else {
        divides_gen[m] |= divides_gen[m | bit];
      }
    }
  }
  std::vector<Class> out(size);
  for (std::size_t m = 0; m < size; ++m) {
    if (is_gen[m]) out[m] = Class::c;
    else if (in_ideal[m]) out[m] = Class::d;
    else if (divides_gen[m]) out[m] = Class::b;
    else out[m] = Class::a;
  }
  return out;
}

}  // namespace

DegreePartition degree_partition(const MonomialIdeal& ideal, int d) {
  const int n = ideal.ambient();
  const auto classes = classify(ideal);
  DegreePartition p;
  p.degree = d;
  for (Mask m : masks_of_degree(n, d)) {
    Monomial mono(n, m);
    switch (classes[m]) {
      case Class::a: p.a.push_back(mono); break;
      case Class::b: p.b.push_back(mono); break;
      case Class::c: p.c.push_back(mono); break;
      case Class::d: p.d.push_back(mono); break;
    }
  }
  return p;
}

std::vector<PartitionSizes> partition_sizes(const MonomialIdeal& ideal) {
  const auto classes = classify(ideal);
  std::vector<PartitionSizes> sizes(static_cast<std::size_t>(ideal.ambient()) + 1);
  for (std::size_t m = 0; m < classes.size(); ++m) {
    auto& s = sizes[static_cast<std::size_t>(popcount(static_cast<Mask>(m)))];
    switch (classes[m]) {
      case Class::a: ++s.a; break;
      case Class::b: ++s.b; break;
      case Class::c: ++s.c; break;
      case Class::d: ++s.d; break;
    }
  }
  return sizes;
}

namespace {

bool by_fvectors(const MonomialIdeal& ideal) {
  return f_vector(facet_complex(ideal)) == f_vector(nonface_complex(ideal));
}

bool by_partition(const MonomialIdeal& ideal) {
  const auto sizes = partition_sizes(ideal);
  return std::all_of(sizes.begin(), sizes.end(),
                     [](const PartitionSizes& s) { return s.a == s.c; });
}

}  // namespace

bool is_f_ideal(const MonomialIdeal& ideal, Method method) {
  require_proper_nonzero(ideal);
  switch (method) {
    case Method::fvector: return by_fvectors(ideal);
    case Method::partition: return by_partition(ideal);
    case Method::both: {
      const bool f = by_fvectors(ideal);
      if (f != by_partition(ideal)) {
        fail(ErrorCode::internal_disagreement, "f-vector and partition criteria disagree");
      }
      return f;
    }
  }
  return false;
}

const char* to_string(Warning w) noexcept {
  switch (w) {
    case Warning::full_monomial_generator: return "x1...xn is a generator";
    case Warning::distinct_vertex_sets: return "facet and non-face complexes have different vertex sets";
    case Warning::dimension_mismatch: return "facet and non-face complexes have different dimensions";
  }
  return "unknown";
}

const char* to_string(Check c) noexcept {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "fail";
    case Check::vacuous: return "vacuous";
  }
  return "unknown";
}

FIdealCertificate certify(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  FIdealCertificate cert;
  const auto facet = facet_complex(ideal);
  const auto nonface = nonface_complex(ideal);
  cert.facet_fvector = f_vector(facet);
  cert.nonface_fvector = f_vector(nonface);
  cert.sizes = partition_sizes(ideal);
  cert.is_f_ideal = cert.facet_fvector == cert.nonface_fvector;

  for (std::size_t d = 0; d < cert.sizes.size(); ++d) {
    const auto& s = cert.sizes[d];
    if (s.a != s.c) {
      cert.first_failure = FailedDegree{static_cast<int>(d), s.a, s.c};
      break;
    }
  }
  if (cert.is_f_ideal == cert.first_failure.has_value()) {
    fail(ErrorCode::internal_disagreement, "f-vector and partition criteria disagree");
  }

  if (ideal.has_full_generator()) cert.warnings.push_back(Warning::full_monomial_generator);
  if (facet.vertices() != nonface.vertices()) cert.warnings.push_back(Warning::distinct_vertex_sets);
  if (cert.facet_fvector.dimension() != cert.nonface_fvector.dimension()) {
    cert.warnings.push_back(Warning::dimension_mismatch);
  }
  return cert;
}

bool NecessaryConditions::all_pass() const noexcept {
  for (Check c : {item1, item2, item3, item4, item5}) {
    if (c == Check::fail) return false;
  }
  return applicable;
}

namespace {

Check check(bool ok) { return ok ? Check::pass : Check::fail; }

}  // namespace

NecessaryConditions necessary_conditions(const MonomialIdeal& ideal) {
  NecessaryConditions r;
  const auto cert = certify(ideal);
  if (!cert.is_f_ideal) return r;
  r.applicable = true;
  const int n = ideal.ambient();
  const auto [alpha, omega] = degree_extremes(ideal);
  r.alpha = alpha;
  r.omega = omega;
  r.f = cert.facet_fvector;
  const auto& f = r.f;

  if (alpha >= 2) {
    bool ok = true;
    for (int i = 0; i <= alpha - 2; ++i) ok = ok && f[i] == binomial(n, i + 1);
    r.item1 = check(ok);
  }
  r.item2 = check(2 * f[alpha - 1] >= binomial(n, alpha));
  r.item3 = check(2 * f[omega - 1] <= binomial(n, omega));
  if (alpha == omega) r.item4 = check(2 * f[alpha - 1] == binomial(n, alpha));
  r.item5 = check(cert.facet_fvector.dimension() == omega - 1 &&
                  cert.nonface_fvector.dimension() == omega - 1 && omega - 1 <= n - 2);
  return r;
}

GeneratorImplications generator_degree_implications(const MonomialIdeal& ideal) {
  GeneratorImplications r;
  const auto cert = certify(ideal);
  const auto [alpha, omega] = degree_extremes(ideal);
  r.alpha = alpha;
  r.omega = omega;
  if (!cert.is_f_ideal || alpha == omega) return r;
  r.applicable = true;
  const int n = ideal.ambient();
  const auto& f = cert.facet_fvector;
  const auto& gens = ideal.generators();
  auto has_degree = [&gens](int deg) {
    return std::any_of(gens.begin(), gens.end(), [deg](const Monomial& g) { return g.degree() == deg; });
  };

  r.raises_alpha.lhs = f[alpha - 1];
  r.raises_alpha.rhs = binomial(n, alpha) - static_cast<std::uint64_t>(n - alpha);
  r.raises_alpha.hypothesis = r.raises_alpha.lhs > r.raises_alpha.rhs;
  if (r.raises_alpha.hypothesis) r.raises_alpha.conclusion = check(has_degree(alpha + 1));

  r.lowers_omega.lhs = f[omega - 1];
  r.lowers_omega.rhs = static_cast<std::uint64_t>(omega);
  r.lowers_omega.hypothesis = r.lowers_omega.lhs < r.lowers_omega.rhs;
  if (r.lowers_omega.hypothesis) r.lowers_omega.conclusion = check(has_degree(omega - 1));
  return r;
}

NMinus2Equivalence equigenerated_n_minus_2_equivalence(const MonomialIdeal& ideal) {
  NMinus2Equivalence r;
  const int n = ideal.ambient();
  if (n < 3 || !ideal.is_equigenerated() || ideal.generators().front().degree() != n - 2) return r;
  r.applicable = true;
  const auto dual = newton_dual(ideal);
  r.ideal_is_f = is_f_ideal(ideal, Method::fvector);
  r.dual_is_f = is_f_ideal(dual, Method::partition);
  const auto primes = minimal_primes(dual);
  r.dual_unmixed_with_half_generators = primes.unmixed && primes.height == n - 2 &&
                                        2 * dual.size() == binomial(n, 2);
  Mask used = 0;
  for (const auto& g : dual.generators()) used |= g.support();
  r.dual_uses_every_variable = used == full_mask(n);
  if (!r.consistent()) {
    fail(ErrorCode::internal_disagreement, "degree n-2 equivalence clauses disagree");
  }
  return r;
}

}  // namespace fideal
