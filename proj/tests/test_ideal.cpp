#include <random>

#include "doctest.h"
#include "fideal/binomial.hpp"
#include "fideal/error.hpp"
#include "fideal/ideal.hpp"
#include "oracles.hpp"

using namespace fideal;

namespace {

Monomial mono(int n, std::initializer_list<int> idx) { return Monomial::from_indices(n, idx); }

MonomialIdeal mixed() { return MonomialIdeal::from_index_lists(5, {{1, 4}, {2, 5}, {1, 2, 3}, {3, 4, 5}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal_disagreement;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(code_of([] { binomial(100, 50); }) == ErrorCode::overflow);
  CHECK(binomial_saturating(100, 50) == UINT64_MAX);
  for (int n = 0; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }
}

TEST_CASE("divides") {
  CHECK(divides(mono(4, {1, 4}), mono(4, {1, 2, 4})));
  CHECK_FALSE(divides(mono(4, {1, 4}), mono(4, {1, 2, 3})));
  const auto m = mono(4, {2, 3});
  CHECK(divides(m, m));
  CHECK(code_of([] { divides(mono(3, {1}), mono(4, {1})); }) == ErrorCode::ambient_mismatch);
}

TEST_CASE("monomial construction") {
  CHECK(code_of([] { Monomial::from_indices(3, {4}); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { Monomial::from_indices(3, {0}); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { Monomial(21, 1); }) == ErrorCode::ambient_too_large);
  CHECK(code_of([] { Monomial(3, 0b1000); }) == ErrorCode::index_out_of_range);
  const auto m = mono(5, {1, 3});
  CHECK(m.degree() == 2);
  CHECK(m.indices() == std::vector<int>{1, 3});
  CHECK(m.complement() == mono(5, {2, 4, 5}));
  CHECK(Monomial::unit(3).is_unit());
  CHECK(Monomial::full(3).is_full());
  CHECK(mono(3, {3}) < mono(3, {1, 2}));
  CHECK(mono(3, {1, 2}) < mono(3, {1, 3}));
}

TEST_CASE("minimalize") {
  const int n = 4;
  std::vector<Monomial> in{mono(n, {1, 2}), mono(n, {1, 2, 3}), mono(n, {4})};
  CHECK(minimalize(in) == std::vector<Monomial>{mono(n, {4}), mono(n, {1, 2})});

  const auto gens = mixed().generators();
  CHECK(minimalize(gens) == gens);

  std::vector<Monomial> dup{mono(n, {1}), mono(n, {1}), mono(n, {1, 2})};
  CHECK(minimalize(dup) == std::vector<Monomial>{mono(n, {1})});
  CHECK(minimalize(std::vector<Monomial>{}).empty());
}

TEST_CASE("minimalize matches the oracle and is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Monomial> in;
    std::vector<oracle::Mask> raw;
    const int k = static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) {
      const Mask m = static_cast<Mask>(rng()) & full_mask(n);
      in.emplace_back(n, m);
      raw.push_back(m);
    }
    const auto once = minimalize(in);
    CHECK(minimalize(once) == once);
    std::vector<Mask> got;
    for (const auto& m : once) got.push_back(m.support());
    CHECK(got == oracle::minimal(raw));
  }
}

TEST_CASE("monomials of degree") {
  CHECK(monomials_of_degree(5, 2).size() == 10);
  const auto d0 = monomials_of_degree(5, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0.front().is_unit());
  const auto d4 = monomials_of_degree(4, 4);
  REQUIRE(d4.size() == 1);
  CHECK(d4.front() == mono(4, {1, 2, 3, 4}));
  CHECK(monomials_of_degree(4, 5).empty());
  CHECK(monomials_of_degree(4, -1).empty());
  for (int n = 0; n <= 12; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto ms = monomials_of_degree(n, d);
      CHECK(ms.size() == binomial(n, d));
      CHECK(std::is_sorted(ms.begin(), ms.end()));
    }
  }
}

TEST_CASE("ideal construction") {
  CHECK(code_of([] { MonomialIdeal::from_masks(3, std::vector<Mask>{0}); }) == ErrorCode::unit_generator);
  const auto unit = MonomialIdeal::from_masks(3, std::vector<Mask>{0, 1}, {.allow_unit = true});
  CHECK(unit.is_unit());
  CHECK(unit.input_was_reduced());
  const auto zero = MonomialIdeal(3);
  CHECK(zero.is_zero());
  CHECK_FALSE(mixed().input_was_reduced());
  const auto red = MonomialIdeal::from_index_lists(3, {{1, 2}, {1, 2, 3}});
  CHECK(red.input_was_reduced());
  CHECK(red.size() == 1);
  CHECK(mixed().size() == 4);
  CHECK_FALSE(mixed().is_equigenerated());
  CHECK(MonomialIdeal::from_index_lists(4, {{1, 2}, {3, 4}}).is_equigenerated());
  CHECK(MonomialIdeal::from_index_lists(3, {{1, 2, 3}}).has_full_generator());
  CHECK(code_of([] { MonomialIdeal::from_index_lists(3, {{4}}); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("contains") {
  const auto I = mixed();
  CHECK(contains(I, mono(5, {1, 3, 4})));
  CHECK_FALSE(contains(I, mono(5, {1, 2})));
  CHECK_FALSE(contains(I, Monomial::unit(5)));
  const auto U = MonomialIdeal::from_masks(5, std::vector<Mask>{0}, {.allow_unit = true});
  CHECK(contains(U, Monomial::unit(5)));
  CHECK(code_of([&] { contains(I, mono(4, {1})); }) == ErrorCode::ambient_mismatch);
}

TEST_CASE("contains is monotone under divisibility") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto gens = oracle::random_generators(n, rng);
    const auto I = MonomialIdeal::from_masks(n, gens);
    for (Mask m = 0; m <= full_mask(n); ++m) {
      const bool in = contains(I, Monomial(n, m));
      CHECK(in == oracle::in_ideal(gens, m));
      if (!in) continue;
      for (int b = 0; b < n; ++b) CHECK(contains(I, Monomial(n, m | (Mask{1} << b))));
    }
  }
}

TEST_CASE("degree extremes") {
  const auto e = degree_extremes(mixed());
  CHECK(e.alpha == 2);
  CHECK(e.omega == 3);
  const auto eq = degree_extremes(MonomialIdeal::from_index_lists(4, {{1, 2}, {3, 4}}));
  CHECK(eq.alpha == 2);
  CHECK(eq.omega == 2);
  const auto one = degree_extremes(MonomialIdeal::from_index_lists(1, {{1}}));
  CHECK(one.alpha == 1);
  CHECK(one.omega == 1);
  CHECK(code_of([] { degree_extremes(MonomialIdeal(3)); }) == ErrorCode::zero_ideal);
}

TEST_CASE("minimal primes examples") {
  auto supports = [](const MinimalPrimes& p) {
    std::vector<Mask> out;
    for (const auto& m : p.primes) out.push_back(m.support());
    return out;
  };
  const auto path = minimal_primes(MonomialIdeal::from_index_lists(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(supports(path) == std::vector<Mask>{0b0101, 0b0110, 0b1010});
  CHECK(path.height == 2);
  CHECK(path.unmixed);

  const auto one = minimal_primes(MonomialIdeal::from_index_lists(1, {{1}}));
  CHECK(supports(one) == std::vector<Mask>{0b1});
  CHECK(one.height == 1);
  CHECK(one.unmixed);

  const auto two = minimal_primes(MonomialIdeal::from_index_lists(3, {{1}, {2, 3}}));
  CHECK(supports(two) == std::vector<Mask>{0b011, 0b101});
  CHECK(two.height == 2);
  CHECK(two.unmixed);

  const auto m = minimal_primes(mixed());
  CHECK(m.height == 2);
  CHECK_FALSE(m.unmixed);
  CHECK(code_of([] { minimal_primes(MonomialIdeal(3)); }) == ErrorCode::zero_ideal);
}

TEST_CASE("minimal primes agree with brute-force transversals") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto gens = oracle::random_generators(n, rng);
    const auto p = minimal_primes(MonomialIdeal::from_masks(n, gens));
    std::vector<Mask> got;
    for (const auto& m : p.primes) got.push_back(m.support());
    const auto want = oracle::minimal_transversals(n, gens);
    CHECK(got == want);
    int lo = 99, hi = 0;
    for (Mask t : want) {
      lo = std::min(lo, oracle::bits(t));
      hi = std::max(hi, oracle::bits(t));
    }
    CHECK(p.height == lo);
    CHECK(p.unmixed == (lo == hi));
  }
}
