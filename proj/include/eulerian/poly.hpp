#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/arith.hpp"

namespace eulerian {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
inline Rational scaled(const Rational& x, const Rational& s) { return x * s; }
inline Rational exact_quotient(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw DomainError("division by zero");
  return a / b;
}

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);
template <class R>
bool is_one(const Poly<R>& p);
template <class R>
Poly<R> scaled(const Poly<R>& p, const Rational& s);

// Dense polynomial with ascending coefficients, kept without trailing zeros.
// Nesting Poly<Poly<Rational>> gives the bivariate ring: the outer variable
// (t' or r) over polynomials in t.
template <class R>
class Poly {
 public:
  using Coeff = R;

  Poly() = default;
  explicit Poly(long c) {
    if (c != 0) c_.push_back(R(c));
  }
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly monomial(R c, int degree) {
    std::vector<R> v(static_cast<size_t>(degree) + 1, R(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(R(1), 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && eulerian::is_one(c_[0]); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : R(0); }

  R eval(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <class F>
  auto map(F f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    std::vector<decltype(f(std::declval<const R&>()))> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<decltype(f(std::declval<const R&>()))>(std::move(out));
  }

  Poly scaled_by(const Rational& s) const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(eulerian::scaled(c, s));
    return Poly(std::move(out));
  }

  Poly times(const R& s) const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * s);
    return Poly(std::move(out));
  }

  Poly derivative() const {
    std::vector<R> out;
    for (size_t k = 1; k < c_.size(); ++k) out.push_back(eulerian::scaled(c_[k], Rational(static_cast<long>(k))));
    return Poly(std::move(out));
  }

  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  // p(t + a), exact Taylor shift.
  Poly shifted(const R& a) const { return compose(Poly(std::vector<R>{a, R(1)})); }

  // t^d p(1/t); requires degree <= d.
  Poly reciprocal(int d) const {
    if (degree() > d) throw DomainError("reciprocal: degree exceeds requested bound");
    std::vector<R> out(static_cast<size_t>(d) + 1, R(0));
    for (size_t k = 0; k < c_.size(); ++k) out[static_cast<size_t>(d) - k] = c_[k];
    return Poly(std::move(out));
  }

  Poly operator-() const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> out(std::max(a.c_.size(), b.c_.size()), R(0));
    for (size_t k = 0; k < a.c_.size(); ++k) out[k] = a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) out[k] = out[k] + b.c_[k];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (eulerian::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && eulerian::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}
template <class R>
bool is_one(const Poly<R>& p) {
  return p.is_one();
}
template <class R>
Poly<R> scaled(const Poly<R>& p, const Rational& s) {
  return p.scaled_by(s);
}

// Long division that must leave no remainder.
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) throw ConsistencyError("polynomial division leaves a remainder");
    return Poly<R>();
  }
  std::vector<R> q(static_cast<size_t>(a.degree() - db) + 1, R(0));
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(rem[k])) continue;
    R f = exact_quotient(rem[k], b.coeffs()[db]);
    for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - f * b.coeffs()[j];
    q[k - db] = f;
  }
  for (const auto& c : rem)
    if (!is_zero(c)) throw ConsistencyError("polynomial division leaves a remainder");
  return Poly<R>(std::move(q));
}

using Poly1 = Poly<Rational>;
using Poly2 = Poly<Poly1>;

// Embeds a univariate polynomial as a constant in the outer variable.
inline Poly2 lift(const Poly1& p) { return Poly2::constant(p); }

inline std::string coeff_text(const Rational& c, const std::vector<std::string>&, size_t) {
  return to_string(c);
}

template <class R>
std::string to_string(const Poly<R>& p, const std::vector<std::string>& vars, size_t level = 0);

template <class R>
std::string coeff_text(const Poly<R>& c, const std::vector<std::string>& vars, size_t level) {
  std::string s = to_string(c, vars, level);
  auto nonzero = std::count_if(c.coeffs().begin(), c.coeffs().end(),
                               [](const R& x) { return !is_zero(x); });
  return nonzero > 1
             ? "(" + s + ")"
             : s;
}

// Ascending-order rendering, e.g. "1 + 11t + 11t^2 + t^3".
template <class R>
std::string to_string(const Poly<R>& p, const std::vector<std::string>& vars, size_t level) {
  if (p.is_zero()) return "0";
  const std::string& v = vars.at(level);
  std::string out;
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    const R& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    std::string cs = coeff_text(c, vars, level + 1);
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      if (cs == "1")
        cs.clear();
      else if (cs == "-1")
        cs = "-";
      term = cs + v + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

inline std::string to_string(const Poly1& p) { return to_string(p, {"t"}); }
inline std::string to_string(const Poly2& p) { return to_string(p, {"t'", "t"}); }

// Coefficients of an integer polynomial; throws if any coefficient is fractional.
std::vector<Integer> integer_coeffs(const Poly1& p);
Poly1 from_integers(const std::vector<Integer>& c);
// Univariate histogram {count of exponent k} as a polynomial.
Poly1 from_counts(const std::vector<long long>& counts);

}  // namespace eulerian
