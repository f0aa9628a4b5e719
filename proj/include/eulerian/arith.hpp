#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulerian {

using Integer = mpz_class;
using Rational = mpq_class;

// Caller broke a documented precondition.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration or scan limit would be exceeded.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two computations that must agree did not; indicates a bug.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive-work limits. Defaults keep the full suite to a few minutes.
struct Budget {
  int max_n = 10;         // largest n for enumerating a class of permutations
  int fn_scan_max = 7;    // largest n for scanning all n^n endofunctions
  int permanent_max = 9;  // largest order for inclusion-exclusion permanents
};

void require_within(int n, int limit, const char* what);

Integer factorial(long n);
// Zero when b < 0 or b > a.
Integer binomial(long a, long b);
Integer power(const Integer& base, unsigned long e);

std::string to_string(const Integer& x);
// Integers print without a denominator.
std::string to_string(const Rational& x);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

}  // namespace eulerian
