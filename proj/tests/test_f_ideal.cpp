#include <algorithm>
#include <random>

#include "doctest.h"
#include "fideal/binomial.hpp"
#include "fideal/duality.hpp"
#include "fideal/enumeration.hpp"
#include "fideal/error.hpp"
#include "fideal/f_ideal.hpp"
#include "oracles.hpp"

using namespace fideal;

namespace {

MonomialIdeal mixed() { return MonomialIdeal::from_index_lists(5, {{1, 4}, {2, 5}, {1, 2, 3}, {3, 4, 5}}); }

std::vector<Mask> masks(const std::vector<Monomial>& ms) {
  std::vector<Mask> out;
  for (const auto& m : ms) out.push_back(m.support());
  return out;
}

Mask set(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << (i - 1);
  return m;
}

bool has_warning(const FIdealCertificate& c, Warning w) {
  return std::find(c.warnings.begin(), c.warnings.end(), w) != c.warnings.end();
}

// Partition sets and both face-count identities checked against brute force.
void check_partition(const MonomialIdeal& I) {
  const int n = I.ambient();
  const auto gens = I.generator_masks();
  const auto fF = oracle::facet_fvector(n, gens);
  const auto fN = oracle::nonface_fvector(n, gens);
  auto at = [](const oracle::Vec& f, int j) -> std::uint64_t {
    const auto i = static_cast<std::size_t>(j + 1);
    return i < f.size() ? f[i] : 0;
  };
  for (int d = 0; d <= n; ++d) {
    const auto p = degree_partition(I, d);
    std::vector<Mask> all;
    for (const auto* part : {&p.a, &p.b, &p.c, &p.d}) {
      for (Mask m : masks(*part)) all.push_back(m);
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == binomial(n, d));
    for (Mask m : masks(p.c)) CHECK(std::find(gens.begin(), gens.end(), m) != gens.end());
    for (Mask m : masks(p.d)) {
      CHECK(oracle::in_ideal(gens, m));
      CHECK(std::find(gens.begin(), gens.end(), m) == gens.end());
    }
    for (Mask m : masks(p.a)) CHECK((!oracle::in_ideal(gens, m) && !oracle::divides_some(gens, m)));
    for (Mask m : masks(p.b)) CHECK((!oracle::in_ideal(gens, m) && oracle::divides_some(gens, m)));
  }
  const auto sizes = partition_sizes(I);
  for (int j = -1; j <= n - 1; ++j) {
    const auto& s = sizes[static_cast<std::size_t>(j + 1)];
    CHECK(at(fN, j) == s.a + s.b);
    CHECK(at(fF, j) == s.b + s.c);
  }
}

}  // namespace

TEST_CASE("degree partition examples") {
  const auto p2 = degree_partition(mixed(), 2);
  CHECK(masks(p2.a) == std::vector<Mask>{set({2, 4}), set({1, 5})});
  CHECK(p2.b.size() == 6);
  CHECK(p2.c.size() == 2);
  CHECK(p2.d.empty());

  const auto p0 = degree_partition(mixed(), 0);
  CHECK(p0.a.empty());
  CHECK(masks(p0.b) == std::vector<Mask>{0});
  CHECK(p0.c.empty());
  CHECK(p0.d.empty());

  const auto p5 = degree_partition(mixed(), 5);
  CHECK(masks(p5.d) == std::vector<Mask>{0b11111});
  CHECK(p5.a.size() + p5.b.size() + p5.c.size() == 0);
}

TEST_CASE("is_f_ideal examples") {
  for (auto m : {Method::fvector, Method::partition, Method::both}) {
    CHECK(is_f_ideal(mixed(), m));
    CHECK(is_f_ideal(MonomialIdeal::from_index_lists(5, {{1}, {2, 3}, {2, 4}, {3, 4}}), m));
    CHECK_FALSE(is_f_ideal(MonomialIdeal::from_index_lists(3, {{1, 2}}), m));
  }
  CHECK_THROWS_AS(is_f_ideal(MonomialIdeal(3)), Error);
  CHECK_THROWS_AS(is_f_ideal(MonomialIdeal::from_masks(3, std::vector<Mask>{0}, {.allow_unit = true})), Error);
}

TEST_CASE("certificates") {
  const auto c = certify(mixed());
  CHECK(c.is_f_ideal);
  CHECK(c.facet_fvector == FVector({1, 5, 8, 2}));
  CHECK(c.nonface_fvector == FVector({1, 5, 8, 2}));
  CHECK_FALSE(c.first_failure);
  CHECK(c.sizes.size() == 6);
  CHECK(c.warnings.empty());

  // A_1 = {x3}, C_1 = {} already differ in degree 1.
  const auto bad = certify(MonomialIdeal::from_index_lists(3, {{1, 2}}));
  CHECK_FALSE(bad.is_f_ideal);
  CHECK(bad.facet_fvector == FVector({1, 2, 1}));
  CHECK(bad.nonface_fvector == FVector({1, 3, 2}));
  REQUIRE(bad.first_failure);
  CHECK(bad.first_failure->degree == 1);
  CHECK(bad.first_failure->a_size == 1);
  CHECK(bad.first_failure->c_size == 0);
  CHECK(bad.sizes[2].a == 2);
  CHECK(bad.sizes[2].c == 1);
  CHECK(has_warning(bad, Warning::distinct_vertex_sets));

  const auto dual = certify(newton_dual(mixed()));
  CHECK(dual.is_f_ideal);
  CHECK(dual.facet_fvector == FVector({1, 5, 8, 2}));

  const auto full = certify(MonomialIdeal::from_index_lists(3, {{1}, {2, 3}}));
  CHECK(has_warning(full, Warning::full_monomial_generator) == false);
  const auto with_full = certify(MonomialIdeal::from_index_lists(2, {{1, 2}}));
  CHECK(has_warning(with_full, Warning::full_monomial_generator));
  CHECK(has_warning(with_full, Warning::dimension_mismatch));
}

TEST_CASE("necessary conditions") {
  const auto r = necessary_conditions(mixed());
  CHECK(r.applicable);
  CHECK(r.alpha == 2);
  CHECK(r.omega == 3);
  CHECK(r.item1 == Check::pass);
  CHECK(r.item2 == Check::pass);
  CHECK(r.item3 == Check::pass);
  CHECK(r.item4 == Check::vacuous);
  CHECK(r.item5 == Check::pass);
  CHECK(r.all_pass());

  for (auto gens : {std::vector<std::vector<int>>{{1}}, {{2}}}) {
    const auto v = necessary_conditions(MonomialIdeal::from_index_lists(2, gens));
    CHECK(v.applicable);
    CHECK(v.item1 == Check::vacuous);
    CHECK(v.item4 == Check::pass);
    CHECK(v.f.at(0) == 1);
    CHECK(v.all_pass());
  }

  const auto V42 = enumerate_V(4, 2);
  REQUIRE(V42.count > 0);
  for (const auto& I : V42.witnesses) {
    const auto n = necessary_conditions(I);
    CHECK(n.all_pass());
    CHECK(n.f.at(1) == 3);
  }

  const auto na = necessary_conditions(MonomialIdeal::from_index_lists(3, {{1, 2}}));
  CHECK_FALSE(na.applicable);
  CHECK_FALSE(na.all_pass());
}

TEST_CASE("generator degree implications") {
  const auto r = generator_degree_implications(mixed());
  CHECK(r.applicable);
  CHECK(r.raises_alpha.hypothesis);
  CHECK(r.raises_alpha.lhs == 8);
  CHECK(r.raises_alpha.rhs == 7);
  CHECK(r.raises_alpha.conclusion == Check::pass);
  CHECK(r.lowers_omega.hypothesis);
  CHECK(r.lowers_omega.lhs == 2);
  CHECK(r.lowers_omega.rhs == 3);
  CHECK(r.lowers_omega.conclusion == Check::pass);

  // An f-ideal with alpha < omega where neither hypothesis holds.
  const auto quiet = MonomialIdeal::from_index_lists(
      6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {1, 4, 6}, {2, 4, 6}, {3, 4, 6}});
  REQUIRE(is_f_ideal(quiet, Method::both));
  const auto q = generator_degree_implications(quiet);
  CHECK(q.applicable);
  CHECK_FALSE(q.raises_alpha.hypothesis);
  CHECK(q.raises_alpha.conclusion == Check::vacuous);
  CHECK_FALSE(q.lowers_omega.hypothesis);
  CHECK(q.lowers_omega.conclusion == Check::vacuous);

  CHECK_FALSE(generator_degree_implications(MonomialIdeal::from_index_lists(4, {{1, 2}, {2, 3}, {3, 4}})).applicable);
}

TEST_CASE("degree n-2 equivalence") {
  const auto path = MonomialIdeal::from_index_lists(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto a = equigenerated_n_minus_2_equivalence(newton_dual(path));
  CHECK(a.applicable);
  CHECK(a.ideal_is_f);
  CHECK(a.dual_is_f);
  CHECK(a.dual_unmixed_with_half_generators);

  const auto b = equigenerated_n_minus_2_equivalence(MonomialIdeal::from_index_lists(4, {{1, 2}}));
  CHECK(b.applicable);
  CHECK_FALSE(b.ideal_is_f);
  CHECK_FALSE(b.dual_is_f);
  CHECK_FALSE(b.dual_unmixed_with_half_generators);

  const auto c = equigenerated_n_minus_2_equivalence(MonomialIdeal::from_index_lists(3, {{1}}));
  CHECK(c.applicable);
  CHECK_FALSE(c.ideal_is_f);
  CHECK_FALSE(c.dual_is_f);
  CHECK_FALSE(c.dual_unmixed_with_half_generators);

  CHECK_FALSE(equigenerated_n_minus_2_equivalence(mixed()).applicable);

  // Dual is the triangle x1x2, x1x3, x2x3: unmixed of height 2 with 3 generators, x4 unused.
  const auto t = equigenerated_n_minus_2_equivalence(MonomialIdeal::from_index_lists(4, {{3, 4}, {2, 4}, {1, 4}}));
  REQUIRE(newton_dual(MonomialIdeal::from_index_lists(4, {{3, 4}, {2, 4}, {1, 4}})) ==
          MonomialIdeal::from_index_lists(4, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(t.applicable);
  CHECK_FALSE(t.ideal_is_f);
  CHECK_FALSE(t.dual_is_f);
  CHECK(t.dual_unmixed_with_half_generators);
  CHECK_FALSE(t.dual_uses_every_variable);
  CHECK_FALSE(t.clause_iii());
}

TEST_CASE("degree-2 f-ideals are unmixed of height n-2 with half of all pairs") {
  for (int n = 4; n <= 5; ++n) {
    CensusOptions o;
    o.witness_cap = 1000;
    const auto census = enumerate_V(n, 2, o);
    REQUIRE(census.count == census.witnesses.size());
    for (const auto& I : census.witnesses) {
      const auto p = minimal_primes(I);
      CHECK(p.unmixed);
      CHECK(p.height == n - 2);
      CHECK(2 * I.size() == binomial(n, 2));
      CHECK(2 * newton_dual(I).size() == binomial(n, 2));
    }
  }
}

TEST_CASE("partition identities, exhaustive for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : oracle::all_antichains(n)) {
      if (a.empty()) continue;
      const auto I = MonomialIdeal::from_masks(n, a);
      check_partition(I);
      const bool want = oracle::is_f_ideal(n, a);
      CHECK(is_f_ideal(I, Method::fvector) == want);
      CHECK(is_f_ideal(I, Method::partition) == want);
    }
  }
}

TEST_CASE("partition identities and criterion agreement, random n = 5..7") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const auto gens = oracle::random_generators(n, rng);
    const auto I = MonomialIdeal::from_masks(n, gens);
    check_partition(I);
    CHECK(is_f_ideal(I, Method::both) == oracle::is_f_ideal(n, gens));
  }
}

TEST_CASE("degree bound reports hold on every f-ideal with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    CensusOptions o;
    o.witness_cap = 100000;
    const auto all = enumerate_all_fideals(n, o);
    REQUIRE(all.complete());
    for (const auto& I : all.witnesses) {
      CHECK(necessary_conditions(I).all_pass());
      const auto g = generator_degree_implications(I);
      if (g.raises_alpha.hypothesis) CHECK(g.raises_alpha.conclusion == Check::pass);
      if (g.lowers_omega.hypothesis) CHECK(g.lowers_omega.conclusion == Check::pass);
    }
  }
}
