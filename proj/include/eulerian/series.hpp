#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/polynomials.hpp"

namespace eulerian {

// Σ c_n u^n for 0 <= n <= order; nothing beyond the order is ever consulted.
template <class R>
class Series {
 public:
  explicit Series(int order = 0) : c_(static_cast<size_t>(checked(order)) + 1, R(0)) {}
  Series(int order, std::vector<R> c) : c_(static_cast<size_t>(checked(order)) + 1, R(0)) {
    for (size_t k = 0; k < c.size() && k < c_.size(); ++k) c_[k] = std::move(c[k]);
  }
  static Series one(int order) {
    Series s(order);
    s.c_[0] = R(1);
    return s;
  }
  // c·u
  static Series linear(int order, R c) {
    Series s(order);
    if (order >= 1) s.c_[1] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<size_t>(n)); }
  R& operator[](int n) { return c_.at(static_cast<size_t>(n)); }
  const std::vector<R>& coeffs() const { return c_; }

  Series truncated(int order) const { return Series(order, std::vector<R>(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(order) + 1))); }

  template <class F>
  auto map(F f) const -> Series<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Series<S>(order(), std::move(out));
  }

  Series scaled_by(const Rational& s) const {
    return map([&](const R& c) { return scaled(c, s); });
  }
  Series times(const R& s) const {
    return map([&](const R& c) { return R(c * s); });
  }
  // f(-u)
  Series negated_argument() const {
    Series out = *this;
    for (size_t k = 1; k < c_.size(); k += 2) out.c_[k] = -out.c_[k];
    return out;
  }

  // Order drops by one: the u^N coefficient has no preimage term.
  Series derivative() const {
    Series out(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k) out.c_[k - 1] = scaled(c_[k], Rational(k));
    return out;
  }
  // Zero constant term; the u^{N+1} term is dropped.
  Series integral() const {
    Series out(order());
    for (int k = 1; k <= order(); ++k) out.c_[k] = scaled(c_[k - 1], Rational(1, k));
    return out;
  }

  Series operator-() const {
    return map([](const R& c) { return R(-c); });
  }
  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= out.order(); ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static int checked(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return order;
  }
  std::vector<R> c_;
};

using SeriesQ = Series<Rational>;
using SeriesT = Series<Poly1>;
using SeriesTT = Series<Poly2>;

inline std::string coeff_string(const Rational& c) { return to_string(c); }
inline std::string coeff_string(const Poly1& c) { return to_string(c); }
inline std::string coeff_string(const Poly2& c) { return to_string(c); }

template <class R>
void require_constant(const Series<R>& s, bool one, const char* op) {
  bool ok = one ? is_one(s[0]) : is_zero(s[0]);
  if (!ok)
    throw DomainError(std::string(op) + " requires constant term " + (one ? "1" : "0") + ", got " +
                      coeff_string(s[0]));
}

// 1/s for constant term 1.
template <class R>
Series<R> reciprocal(const Series<R>& s) {
  require_constant(s, true, "reciprocal");
  Series<R> out(s.order());
  out[0] = R(1);
  for (int n = 1; n <= s.order(); ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) acc = acc + s[k] * out[n - k];
    out[n] = -acc;
  }
  return out;
}

// exp(s) for constant term 0, via n e_n = Σ k s_k e_{n-k}.
template <class R>
Series<R> exp(const Series<R>& s) {
  require_constant(s, false, "exp");
  Series<R> out(s.order());
  out[0] = R(1);
  for (int n = 1; n <= s.order(); ++n) {
    R acc(0);
    for (int k = 1; k <= n; ++k) acc = acc + scaled(s[k], Rational(k)) * out[n - k];
    out[n] = scaled(acc, Rational(1, n));
  }
  return out;
}

// log(s) for constant term 1, as ∫ s'/s.
template <class R>
Series<R> log(const Series<R>& s) {
  require_constant(s, true, "log");
  Series<R> q = s.derivative() * reciprocal(s).truncated(std::max(s.order() - 1, 0));
  Series<R> out(s.order());
  for (int n = 1; n <= s.order(); ++n) out[n] = scaled(q[n - 1], Rational(1, n));
  return out;
}

template <class R>
Series<R> pow(const Series<R>& s, unsigned k) {
  Series<R> acc = Series<R>::one(s.order());
  for (unsigned i = 0; i < k; ++i) acc = acc * s;
  return acc;
}

template <class R>
std::string to_string(const Series<R>& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    if (is_zero(s[n])) continue;
    if (!out.empty()) out += " + ";
    out += "[" + coeff_string(s[n]) + "]u^" + std::to_string(n);
  }
  return out.empty() ? "0" : out + " + O(u^" + std::to_string(s.order() + 1) + ")";
}

// Equality up to the smaller order; on failure names the first differing power.
template <class R>
Witness compare_series(const Series<R>& a, const Series<R>& b, std::string detail = {}) {
  const int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n)
    if (a[n] != b[n])
      return Witness{false, "[u^" + std::to_string(n) + "] " + coeff_string(a[n]),
                     "[u^" + std::to_string(n) + "] " + coeff_string(b[n]), std::move(detail)};
  return Witness{true, "agree to order " + std::to_string(N), "agree to order " + std::to_string(N), std::move(detail)};
}

// Coefficient of u^n is family(n)/n!.
template <class R>
Series<R> egf_from_polynomials(const std::function<R(int)>& family, int N) {
  Series<R> s(N);
  for (int n = 0; n <= N; ++n) s[n] = scaled(family(n), Rational(1) / Rational(factorial(n)));
  return s;
}

// ʳA(t,u) = Σ_{n >= r-1} u^{n-r+1}/(n-r+1)! ʳAₙ(t) from the coefficient tables; r >= 1.
SeriesT eulerian_egf(int N, int r = 1);
// Σ uⁿ/n! Āₙ(t,t') from enumeration, order limited by budget.max_n.
SeriesTT abar_egf(int N, const Budget& budget = {});

// Closed forms; each denominator has constant term 1-t, divided out before inverting.
SeriesTT closed_form_abar(int N);       // (1-t)/(exp((t-t')u) - t exp((1-t')u))
SeriesT closed_form_zero_shift(int N);  // (1-t)/(1 - t exp((1-t)u)), EGF of ⁰Aₙ
SeriesT closed_form_eulerian(int N);    // (1-t)/(-t + exp((t-1)u)), EGF of Aₙ
SeriesT closed_form_roselle(int N);     // (1-t)/(exp(ut) - t exp(u)), EGF of Bₙ

// Ā(t,t',u) = exp(ut' + C), C = Σ_{n>=2} uⁿ/n! t A_{n-1}(t).
Witness verify_abar_exponential(int N, const Budget& budget = {});

enum class ClosedForm { Abar, ZeroShift, Eulerian, Roselle };
std::string to_string(ClosedForm f);
// Closed form against the enumerated or tabulated EGF, and against the
// matching specialization t' = t, 1, 0 of the general form.
Witness verify_closed_form(ClosedForm f, int N, const Budget& budget = {});

enum class AbarRelation { Affine, ExpC, Exponential };
std::string to_string(AbarRelation rel);
// Affine: Ā(t,t,u) = 1 + t(Ā(t,1,u) - 1); ExpC: exp(C) = Ā(t,1,u)e^{-u};
// Exponential: Ā(t,t,u) = e^{ut-u} Ā(t,1,u).
Witness verify_abar_relation(AbarRelation rel, int N);

// ʳA(t,u) = (r-1)! (¹A(t,u))^r.
Witness verify_power_identity(int r, int N);
// ʳAₙ read off (r-1)! (closed-form ¹A)^r; r >= 1, n >= r-1.
Poly1 eulerian_by_series(int n, int r);

// A' = A(1 + t(A-1)) and A_{n+1} = Aₙ + t Σ_{m<n} C(n,m) A_m A_{n-m}.
Witness verify_bernoulli(int N);

// Value of a multiplicative weight: coeff · t'^tp · t^t.
struct Term {
  Rational coeff;
  int tp = 0;
  int t = 0;
};

struct Weight {
  enum class Kind { CycleIndicator, ThetaPrime, ThetaPrimeCycles, Biexcedence, Banded };
  Kind kind = Kind::ThetaPrime;
  std::vector<Rational> x;  // cycle indicator: cycle of length L weighs x[L-1]
  int r = 1;                // cycle-counting power base
  Rational a, b, c;         // banded matrix entries above, on, below the diagonal

  static Weight cycle_indicator(std::vector<Rational> x) {
    for (auto& v : x) v.canonicalize();  // mpq_class(2, 2) is not reduced on construction
    return {Kind::CycleIndicator, std::move(x), 1, 0, 0, 0};
  }
  static Weight theta_prime() { return {Kind::ThetaPrime, {}, 1, 0, 0, 0}; }
  static Weight theta_prime_cycles(int r) { return {Kind::ThetaPrimeCycles, {}, r, 0, 0, 0}; }
  static Weight biexcedence() { return {Kind::Biexcedence, {}, 1, 0, 0, 0}; }
  static Weight banded(Rational a, Rational b, Rational c) {
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    return {Kind::Banded, {}, 1, a, b, c};
  }
};

std::string to_string(const Weight& w);
Term weigh(const Weight& w, const Permutation& p);

// Σ uⁿ/n! μ{all} = exp(Σ uⁿ/n! μ{cyclic}) and the signed inverse, with the
// left sides assembled factor by factor from canonical factorizations.
Witness verify_exponential_formula(const Weight& w, int N, const Budget& budget = {});
// Σ uⁿ/n! Σ_σ θ'σ r^{z(σ)} = Ā(t,t',u)^r.
Witness verify_cycle_power_weight(int r, int N, const Budget& budget = {});

// card Uₙ by scan up to budget.fn_scan_max, Cayley's (n+1)^{n-1} above it.
Integer ultimately_idempotent_count(int n, const Budget& budget = {});
// w = exp(uw) for w = Σ uⁿ/n! card Uₙ.
Witness verify_arborescence_equation(int N, const Budget& budget = {});
// card Vₙ = n card U_{n-1} and U = exp(V) on the scanned range.
Witness verify_arborescence_counts(const Budget& budget = {});

template <class R>
struct Matrix {
  int n = 0;
  std::vector<std::vector<R>> cell;

  explicit Matrix(int size = 0) : n(size), cell(static_cast<size_t>(size), std::vector<R>(static_cast<size_t>(size), R(0))) {}
  // 1-based access.
  R& operator()(int i, int j) { return cell[i - 1][j - 1]; }
  const R& operator()(int i, int j) const { return cell[i - 1][j - 1]; }

  static Matrix banded(int size, const R& a, const R& b, const R& c) {
    Matrix m(size);
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j) m(i, j) = i < j ? a : (i == j ? b : c);
    return m;
  }
};

// 1 on and above the diagonal, -(i-1) just below it, 0 elsewhere.
Matrix<Rational> kittel_matrix(int n);
// Banded matrix with its first column zeroed.
Matrix<Rational> zero_first_column_matrix(int n, const Rational& a, const Rational& b, const Rational& c);

// Ryser inclusion-exclusion over column subsets.
template <class R>
R permanent(const Matrix<R>& m, int budget_max = Budget{}.permanent_max) {
  require_within(m.n, budget_max, "permanent");
  if (m.n == 0) return R(1);
  R total(0);
  const unsigned long subsets = 1UL << m.n;
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    R prod(1);
    for (int i = 0; i < m.n && !is_zero(prod); ++i) {
      R row(0);
      for (int j = 0; j < m.n; ++j)
        if (mask >> j & 1UL) row = row + m.cell[i][j];
      prod = prod * row;
    }
    if ((m.n - __builtin_popcountl(mask)) % 2)
      total = total - prod;
    else
      total = total + prod;
  }
  return total;
}

namespace detail {

template <class R>
R cofactor_det(const std::vector<std::vector<R>>& a) {
  const size_t n = a.size();
  if (n == 0) return R(1);
  if (n == 1) return a[0][0];
  R total(0);
  for (size_t j = 0; j < n; ++j) {
    if (is_zero(a[0][j])) continue;
    std::vector<std::vector<R>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    R term = a[0][j] * cofactor_det(minor);
    total = j % 2 ? R(total - term) : R(total + term);
  }
  return total;
}

// Fraction-free elimination; every division is exact.
template <class R>
R bareiss_det(std::vector<std::vector<R>> a) {
  const size_t n = a.size();
  R prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_quotient(R(a[i][j] * a[k][k] - a[i][k] * a[k][j]), prev);
    prev = a[k][k];
  }
  R d = a[n - 1][n - 1];
  return negate ? R(-d) : d;
}

}  // namespace detail

// Cofactor expansion up to order 6, fraction-free elimination beyond.
template <class R>
R determinant(const Matrix<R>& m) {
  if (m.n == 0) return R(1);
  return m.n <= 6 ? detail::cofactor_det(m.cell) : detail::bareiss_det(m.cell);
}

// (1 + Σ uⁿ/n! per Ξₙ)^{-1} = 1 + Σ (-u)ⁿ/n! det Ξₙ for the (a,b,c)-banded
// matrix, the closed form of det Ξₙ, and the exponential closed forms.
Witness verify_perdet_identity(const Rational& a, const Rational& b, const Rational& c, int N,
                               int permanent_max = Budget{}.permanent_max);
enum class SpecialMatrix { Kittel, ZeroFirstColumn };
// The same identity for two non-banded families where it still holds.
Witness verify_special_matrix(SpecialMatrix which, int N, int permanent_max = Budget{}.permanent_max);
// per of the (t, t', 1)-banded matrix equals Āₙ(t,t').
Witness verify_banded_permanent_abar(int n, const Budget& budget = {});

struct TanSec {
  SeriesQ tan;
  SeriesQ sec;
};
// tan from Σ uⁿ/n! Aₙ(-1) and sec from Σ uⁿ/n! Bₙ(-1), using the closed forms.
TanSec tan_sec_series(int N);
// tan·cos = sin, sec·cos = 1 against factorial series, and sec = exp(∫ tan).
Witness verify_tan_sec(int N);

}  // namespace eulerian
