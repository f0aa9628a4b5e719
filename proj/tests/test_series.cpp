#include <doctest.h>

#include "eulerian/series.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {

std::vector<Integer> scaled_coeffs(const Poly1& p, int n) { return integer_coeffs(p.scaled_by(Rational(oracle::fact(n)))); }

// Every cycle of the functional graph is a fixed point.
bool only_fixed_cycles(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  for (int s = 0; s < n; ++s) {
    int x = s;
    for (int k = 0; k < n; ++k) x = f[static_cast<size_t>(x)];  // now on a cycle
    if (f[static_cast<size_t>(x)] != x) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tan and sec carry the Euler numbers") {
  const int N = 14;
  TanSec ts = tan_sec_series(N);
  auto t = oracle::euler_numbers(N);
  for (int n = 0; n <= N; ++n) {
    Rational tan_n = ts.tan[n] * Rational(oracle::fact(n)), sec_n = ts.sec[n] * Rational(oracle::fact(n));
    CAPTURE(n);
    CHECK(tan_n == (n % 2 ? Rational(t[static_cast<size_t>(n)]) : Rational(0)));
    CHECK(sec_n == (n % 2 ? Rational(0) : Rational(t[static_cast<size_t>(n)])));
  }
  CHECK(verify_tan_sec(N));
}

TEST_CASE("closed forms expand to the oracle distributions") {
  const int N = 7;
  SeriesT eul = closed_form_eulerian(N), zero = closed_form_zero_shift(N), ros = closed_form_roselle(N);
  SeriesTT abar = closed_form_abar(N);
  for (int n = 1; n <= N; ++n) {
    CAPTURE(n);
    CHECK(scaled_coeffs(eul[n], n) == oracle::shifted_eulerian(n, 1));
    CHECK(scaled_coeffs(zero[n], n) == oracle::shifted_eulerian(n, 0));
    CHECK(scaled_coeffs(ros[n], n) ==
          oracle::distribution(n, oracle::derangement, [](const oracle::Word& w) { return oracle::shifted_excedances(w, 1); }));
    std::vector<std::vector<long>> grid(static_cast<size_t>(n) + 1, std::vector<long>(static_cast<size_t>(n) + 1, 0));
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      ++grid[static_cast<size_t>(oracle::fixed_points(w))][static_cast<size_t>(oracle::shifted_excedances(w, 1))];
    });
    Poly2 c = abar[n].scaled_by(Rational(oracle::fact(n)));
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n; ++k) CHECK(c.coeff(i).coeff(k) == grid[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  CHECK(eul[0] == Poly1(1));
}

TEST_CASE("series arithmetic round trips") {
  SeriesQ s(8);
  for (int k = 1; k <= 8; ++k) {
    s[k] = Rational(k * k - 3, k + 2);
    s[k].canonicalize();
  }
  CHECK(compare_series(log(exp(s)), s));
  SeriesQ one_plus = s;
  one_plus[0] = 1;
  CHECK(compare_series(reciprocal(one_plus) * one_plus, SeriesQ::one(8)));
  CHECK(compare_series(pow(one_plus, 3), one_plus * one_plus * one_plus));
}

TEST_CASE("shifted Eulerian polynomials from the series") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r) CHECK(integer_coeffs(eulerian_by_series(n, r)) == oracle::shifted_eulerian(n, r));
}

TEST_CASE("permanent and determinant against the Leibniz sums") {
  for (int n = 1; n <= 6; ++n) {
    Matrix<Rational> m(n);
    std::vector<std::vector<Rational>> raw(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Rational v((i * 7 + j * 3) % 5 - 2, 1 + (i + j) % 3);
        v.canonicalize();
        m(i, j) = v;
        raw[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = v;
      }
    CHECK(permanent(m) == oracle::permanent(raw));
    Rational det = 0;
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      Rational prod = 1;
      for (int i = 0; i < n; ++i) prod *= raw[static_cast<size_t>(i)][static_cast<size_t>(w[static_cast<size_t>(i)]) - 1];
      int inversions = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) inversions += w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)];
      det += inversions % 2 ? -prod : prod;
    });
    CHECK(determinant(m) == det);
  }
  CHECK_THROWS_AS(permanent(Matrix<Rational>(5), 4), BudgetError);
}

TEST_CASE("ultimately idempotent maps against a scan") {
  for (int n = 1; n <= 5; ++n) {
    long count = 0;
    std::vector<int> f(static_cast<size_t>(n), 0);
    for (;;) {
      count += only_fixed_cycles(f);
      size_t i = 0;
      while (i < f.size() && ++f[i] == n) f[i++] = 0;
      if (i == f.size()) break;
    }
    CHECK(ultimately_idempotent_count(n) == count);
  }
  Integer cayley = 1;
  for (int k = 0; k < 11; ++k) cayley *= 13;
  CHECK(ultimately_idempotent_count(12) == cayley);
}

TEST_CASE("series identities at moderate order") {
  const int N = 7;
  CHECK(verify_abar_exponential(N));
  for (auto f : {ClosedForm::Abar, ClosedForm::ZeroShift, ClosedForm::Eulerian, ClosedForm::Roselle}) CHECK(verify_closed_form(f, N));
  for (auto rel : {AbarRelation::Affine, AbarRelation::ExpC, AbarRelation::Exponential}) CHECK(verify_abar_relation(rel, N));
  for (int r = 1; r <= 4; ++r) CHECK(verify_power_identity(r, N));
  CHECK(verify_bernoulli(N));
  CHECK(verify_arborescence_equation(N));
  CHECK(verify_arborescence_counts());
  CHECK(verify_perdet_identity(Rational(2), Rational(3), Rational(5), N));
  CHECK(verify_special_matrix(SpecialMatrix::Kittel, N));
  CHECK(verify_special_matrix(SpecialMatrix::ZeroFirstColumn, N));
  for (int n = 1; n <= 6; ++n) CHECK(verify_banded_permanent_abar(n));
  CHECK(verify_cycle_power_weight(2, 6));
}

TEST_CASE("exponential formula for each weight") {
  std::vector<Rational> x{Rational(1), Rational(2), Rational(1, 3), Rational(5), Rational(-1), Rational(7, 2)};
  for (const Weight& w : {Weight::cycle_indicator(x), Weight::theta_prime(), Weight::biexcedence(),
                          Weight::banded(Rational(2), Rational(3), Rational(5))}) {
    CAPTURE(to_string(w));
    CHECK(verify_exponential_formula(w, 6));
  }
}

TEST_CASE("cycle-counting weight on two transpositions") {
  Permutation p{2, 1, 4, 3};
  Term whole = weigh(Weight::theta_prime_cycles(3), p);
  CHECK(whole.coeff == 9);
  CHECK(whole.t == 2);
}
