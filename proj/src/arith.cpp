#include "eulerian/arith.hpp"

namespace eulerian {

void require_within(int n, int limit, const char* what) {
  if (n > limit)
    throw BudgetError(std::string(what) + " limit exceeded: n=" + std::to_string(n) +
                      " > " + std::to_string(limit));
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (is_integral(x)) return x.get_num().get_str();
  return x.get_str();
}

}  // namespace eulerian
