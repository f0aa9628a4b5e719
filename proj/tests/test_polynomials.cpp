#include <doctest.h>

#include "eulerian/polynomials.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("reduced tables, last rows as printed") {
  CHECK(integer_coeffs(eulerian_reduced(8, 1)) == ints({1, 247, 4293, 15619, 15619, 4293, 247, 1}));
  CHECK(integer_coeffs(eulerian_reduced(8, 2)) == ints({64, 1611, 7197, 8422, 2682, 183, 1}));
  CHECK(integer_coeffs(eulerian_reduced(8, 3)) == ints({243, 1909, 3134, 1314, 119, 1}));
  CHECK(integer_coeffs(eulerian_reduced(8, 4)) == ints({256, 821, 531, 71, 1}));
  CHECK(integer_coeffs(eulerian_reduced(8, 5)) == ints({125, 171, 39, 1}));
  CHECK(integer_coeffs(eulerian_reduced(7, 4)) == ints({64, 113, 32, 1}));
}

TEST_CASE("every method agrees with the shifted-excedance oracle") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      auto expected = oracle::shifted_eulerian(n, r);
      CHECK(integer_coeffs(eulerian::eulerian(n, r)) == expected);
      CHECK(integer_coeffs(eulerian_recurrence_shift(n, r)) == expected);
      if (r == 0) continue;
      CHECK(integer_coeffs(eulerian_explicit_poly(n, r)) == expected);
      CHECK(integer_coeffs(eulerian_by_enumeration(n, r)) == expected);
      // The explicit formula is indexed by the degree bound: coefficient k of ʳA_{m-1+r}.
      for (size_t k = 0; k < expected.size(); ++k) CHECK(eulerian_explicit(n - r + 1, r, static_cast<int>(k)) == expected[k]);
    }
}

TEST_CASE("reduced polynomials divide out r!") {
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r) {
      auto full = integer_coeffs(eulerian::eulerian(n, r)), red = integer_coeffs(eulerian_reduced(n, r));
      REQUIRE(full.size() == red.size());
      for (size_t k = 0; k < full.size(); ++k) CHECK(full[k] == red[k] * oracle::fact(r));
    }
}

TEST_CASE("vector families give the same distribution") {
  using B = Statistic::Base;
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= std::min(n, 3); ++r)
      for (int primes = 0; primes <= r; ++primes)
        for (B base : {B::E, B::DPlusDPrime, B::M, B::DeltaECyclic, B::DeltaDFirstIsN}) {
          Statistic s{base, primes};
          CAPTURE(to_string(s));
          CHECK(eulerian_by_enumeration(n, r, s) == eulerian::eulerian(n, r));
        }
}

TEST_CASE("Stirling numbers by both modes against the explicit sum") {
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= p; ++q) {
      CHECK(stirling2(p, q) == oracle::stirling2(p, q));
      CHECK(stirling2(p, q, StirlingMode::QuasiPermutation) == oracle::stirling2(p, q));
    }
  CHECK(stirling2(20, 7) == oracle::stirling2(20, 7));
  CHECK_THROWS_AS(stirling2(3, 0), DomainError);
  CHECK_THROWS_AS(stirling2(9, 2, StirlingMode::QuasiPermutation), BudgetError);
}

TEST_CASE("Worpitzky against a direct binomial sum") {
  // x^n = Σ_k A(n,k) C(x+k, n) with A(n,k) from the oracle.
  for (int n = 1; n <= 7; ++n) {
    auto a = oracle::shifted_eulerian(n, 1);
    for (int x = 1; x <= 6; ++x) {
      mpz_class sum = 0, xn;
      for (size_t k = 0; k < a.size(); ++k) sum += a[k] * oracle::choose(x + static_cast<int>(k), n);
      mpz_ui_pow_ui(xn.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(n));
      CHECK(sum == xn);
    }
  }
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      CHECK(worpitzky(m, n));
      for (int r = 1; r <= std::min(m, n); ++r) CHECK(worpitzky_generalized(m, n, r));
    }
}

TEST_CASE("identities in n and r") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(frobenius_identity(n));
    for (int r = 1; r <= std::min(n, 3); ++r) CHECK(riordan_stirling_identity(n, r));
  }
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= std::min(n, 3); ++r) CHECK(newcomb_specialization(n, r));
  for (int n = 1; n <= 5; ++n) {
    CHECK(q_saillant_identity(n));
    for (int r = 1; r <= 3; ++r) CHECK(q_eulerian_identity(n, r));
  }
}

TEST_CASE("monotone maps with distinguished indices") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= m; ++n) {
      // No distinguished index: strictly increasing, C(m, n).
      CHECK(count_monotone_maps(m, n, {}) == oracle::choose(m, n));
      // All of [n-1] distinguished: weakly increasing, C(m+n-1, n).
      std::vector<int> all;
      for (int d = n - 1; d >= 1; --d) all.push_back(d);
      CHECK(count_monotone_maps(m, n, all) == oracle::choose(m + n - 1, n));
    }
  CHECK_THROWS_AS(count_monotone_maps(4, 3, {1, 2}), DomainError);
}

TEST_CASE("Roselle polynomials against derangement excedances") {
  for (int n = 1; n <= 7; ++n) {
    auto expected = oracle::distribution(n, oracle::derangement, [](const oracle::Word& w) { return oracle::shifted_excedances(w, 1); });
    CAPTURE(n);
    CHECK(integer_coeffs(roselle_polynomial(n)) == expected);
    CHECK(integer_coeffs(roselle_polynomial(n, RoselleVia::RisesOnSuccessionFree)) == expected);
    CHECK(integer_coeffs(roselle_from_eulerian(n)) == expected);
  }
}

TEST_CASE("two-variable fixed point and excedance polynomial") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<long long>> grid(static_cast<size_t>(n) + 1, std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      ++grid[static_cast<size_t>(oracle::fixed_points(w))][static_cast<size_t>(oracle::shifted_excedances(w, 1))];
    });
    Poly2 a = abar_polynomial(n);
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n; ++k) CHECK(a.coeff(i).coeff(k) == static_cast<long>(grid[static_cast<size_t>(i)][static_cast<size_t>(k)]));
    CHECK(abar_specializations(n));
  }
}

TEST_CASE("injection reading reproduces the reduced table") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= std::min(n, 3); ++r) CHECK(injection_interpretation(n, r) == eulerian_reduced(n, r));
}

TEST_CASE("values at -1") {
  // A_{2p}(-1) = 0 and B_{2p-1}(-1) = 0.
  for (int n = 2; n <= 10; n += 2) CHECK(eval_at_minus_one(n, WhichPoly::A) == 0);
  for (int n = 1; n <= 9; n += 2) CHECK(eval_at_minus_one(n, WhichPoly::B) == 0);
  auto t = oracle::euler_numbers(10);
  for (int n = 2; n <= 10; n += 2) CHECK(eval_at_minus_one(n, WhichPoly::B) * ((n / 2) % 2 ? -1 : 1) == t[static_cast<size_t>(n)]);
}

TEST_CASE("domain and budget errors") {
  CHECK_THROWS_AS(eulerian::eulerian(3, -1), DomainError);
  Budget tight;
  tight.max_n = 6;
  CHECK_THROWS_AS(eulerian_by_enumeration(7, 1, {}, Execution::Parallel, tight), BudgetError);
}

TEST_CASE("serial and parallel enumeration agree") {
  for (int n = 3; n <= 8; ++n)
    for (int r = 1; r <= 3; ++r)
      CHECK(eulerian_by_enumeration(n, r, {}, Execution::Serial) == eulerian_by_enumeration(n, r, {}, Execution::Parallel));
  CHECK(roselle_polynomial(8, RoselleVia::ExcedanceOnDerangements, Execution::Serial) ==
        roselle_polynomial(8, RoselleVia::ExcedanceOnDerangements, Execution::Parallel));
}
