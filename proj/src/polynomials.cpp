#include "eulerian/polynomials.hpp"

#include <map>
#include <mutex>

namespace eulerian {

namespace {

const Poly1 kT = Poly1::var();
const Poly1 kOne(1);

Poly1 constant(const Integer& c) { return Poly1::constant(Rational(c)); }

void require_shift(int n, int r) {
  if (r < 0 || r > n)
    throw DomainError("shift r=" + std::to_string(r) + " outside 0.." + std::to_string(n));
}

}  // namespace

std::string to_string(const Statistic& s) {
  static const char* names[] = {"E", "D+D'", "M", "D", "dE|cyclic(n+1)", "dD|first-is-n(n+1)"};
  return names[static_cast<int>(s.base)] + std::string(" primes=") + std::to_string(s.primes);
}

Poly1 eulerian_by_enumeration(int n, int r, Statistic stat, Execution ex, const Budget& budget) {
  if (n < 0 || r < 0) throw DomainError("negative size or shift");
  if (stat.primes < 0 || stat.primes > r) throw DomainError("monomial needs 0 <= primes <= r");
  if (r > n) return constant(factorial(n));
  const int deltas = r - stat.primes, primes = stat.primes;
  auto measure = [deltas, primes](StatVector v) { return positive_count(apply_monomial(std::move(v), deltas, primes)); };
  switch (stat.base) {
    case Statistic::Base::E:
      return class_polynomial(n, ClassTag::Kind::All, [&](const Permutation& p) { return measure(excedance_vector(p)); }, ex, budget);
    case Statistic::Base::DPlusDPrime:
      return class_polynomial(
          n, ClassTag::Kind::All, [&](const Permutation& p) { return measure(descent_vector(p) + dprime_vector(p)); }, ex,
          budget);
    case Statistic::Base::M:
      return class_polynomial(n, ClassTag::Kind::All, [&](const Permutation& p) { return measure(rise_vector(p)); }, ex, budget);
    case Statistic::Base::D:
      return class_polynomial(n, ClassTag::Kind::All, [&](const Permutation& p) { return measure(descent_vector(p)); }, ex, budget);
    case Statistic::Base::DeltaECyclic:
      return class_polynomial(
          n + 1, ClassTag::Kind::Circular, [&](const Permutation& p) { return measure(delta(excedance_vector(p))); }, ex,
          budget);
    case Statistic::Base::DeltaDFirstIsN:
      return class_polynomial(
          n + 1, ClassTag::Kind::FirstIsN, [&](const Permutation& p) { return measure(delta(descent_vector(p))); }, ex,
          budget);
  }
  throw DomainError("unknown statistic");
}

Poly1 eulerian_recurrence_riordan(int n, int r) {
  require_shift(n, r);
  std::vector<Integer> row{factorial(r)};
  for (int m = r + 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<size_t>(m - r) + 1, 0);
    for (int k = 0; k <= m - r; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += (k + r) * row[k];
      if (k >= 1) next[k] += (m + 1 - k - r) * row[k - 1];
    }
    Poly1 prev = from_integers(row), cur = from_integers(next);
    Poly1 differential = (Poly1::constant(Rational(r)) + kT.scaled_by(m - r)) * prev + kT * (kOne - kT) * prev.derivative();
    if (differential != cur)
      throw ConsistencyError("coefficient and differential recurrences disagree at n=" + std::to_string(m) +
                             ", r=" + std::to_string(r));
    row = std::move(next);
  }
  return from_integers(row);
}

Poly1 eulerian_recurrence_shift(int n, int r) {
  require_shift(n, r);
  if (n == 0) return kOne;
  if (r == 0) return kT * eulerian_recurrence_riordan(n, 1);
  // column[m] = ʳA_m, with ʳA_m = m! below the diagonal.
  std::vector<Poly1> column;
  for (int m = 0; m <= n; ++m) column.push_back(m == 0 ? kOne : eulerian_recurrence_riordan(m, 1));
  for (int s = 1; s < r; ++s) {
    std::vector<Poly1> next(column.size());
    for (int m = 0; m <= n; ++m) {
      if (m <= s) {
        next[m] = constant(factorial(m));
        continue;
      }
      Poly1 numerator = column[m] + (kT - kOne).scaled_by(s) * column[m - 1];
      next[m] = exact_quotient(numerator, kT);
    }
    column = std::move(next);
  }
  return column[n];
}

Integer eulerian_explicit(int n, int r, int k) {
  if (r < 1 || n < 1 || k < 0 || k > n - 1) throw DomainError("explicit formula needs r >= 1 and 0 <= k <= n-1");
  Integer sum = 0;
  for (int i = 0; i <= k; ++i) {
    Integer term = power(Integer(k - i + r), static_cast<unsigned long>(n - 1)) * binomial(n + r, i) *
                   binomial(k - i + r, r);
    if (i % 2)
      sum -= term;
    else
      sum += term;
  }
  Integer value = factorial(r) * sum;
  if (value < 0) throw ConsistencyError("explicit formula produced a negative coefficient");
  return value;
}

Poly1 eulerian_explicit_poly(int N, int r) {
  if (r < 1 || r > N) throw DomainError("explicit polynomial needs 1 <= r <= N");
  const int n = N - r + 1;
  std::vector<Integer> c;
  for (int k = 0; k <= n - 1; ++k) c.push_back(eulerian_explicit(n, r, k));
  return from_integers(c);
}

Poly1 eulerian(int n, int r) {
  if (n < 0 || r < 0) throw DomainError("negative size or shift");
  if (r >= n) return constant(factorial(n));
  return eulerian_recurrence_riordan(n, r);
}

Poly1 eulerian_reduced(int n, int r) { return eulerian(n, r).scaled_by(Rational(1) / Rational(factorial(r))); }

namespace {

// Partial injections W of pairs k < k' with |W| = target.
long long count_quasi_permutations(int p, int target) {
  std::vector<bool> used(static_cast<size_t>(p) + 1, false);
  long long count = 0;
  std::function<void(int, int)> go = [&](int k, int size) {
    if (size > target) return;
    if (k > p) {
      count += size == target;
      return;
    }
    go(k + 1, size);
    for (int k2 = k + 1; k2 <= p; ++k2) {
      if (used[k2]) continue;
      used[k2] = true;
      go(k + 1, size + 1);
      used[k2] = false;
    }
  };
  go(1, 0);
  return count;
}

}  // namespace

Integer stirling2(int p, int q, StirlingMode mode) {
  if (q < 1 || q > p) throw DomainError("stirling2 needs 1 <= q <= p");
  if (mode == StirlingMode::QuasiPermutation) {
    if (p > 8) throw BudgetError("quasi-permutation scan limit exceeded: p=" + std::to_string(p) + " > 8");
    return Integer(std::to_string(count_quasi_permutations(p, p - q)));
  }
  std::vector<std::vector<Integer>> s(static_cast<size_t>(p) + 1, std::vector<Integer>(static_cast<size_t>(p) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[p][q];
}

namespace {

// Σ_k c_k (t-1)^k expanded by the binomial transform.
Poly1 from_shifted_basis(const std::vector<Integer>& c) {
  std::vector<Integer> out(c.size(), 0);
  for (size_t k = 0; k < c.size(); ++k)
    for (size_t j = 0; j <= k; ++j) {
      Integer term = c[k] * binomial(static_cast<long>(k), static_cast<long>(j));
      if ((k - j) % 2)
        out[j] -= term;
      else
        out[j] += term;
    }
  return from_integers(out);
}

}  // namespace

Witness frobenius_identity(int n) {
  if (n < 1) throw DomainError("frobenius identity needs n >= 1");
  std::vector<Integer> c;
  for (int k = 0; k <= n - 1; ++k) c.push_back(factorial(n - k) * stirling2(n, n - k));
  return compare(eulerian(n, 1), from_shifted_basis(c), "n=" + std::to_string(n));
}

Witness riordan_stirling_identity(int n, int r) {
  if (r < 1 || r > n) throw DomainError("riordan-stirling needs 1 <= r <= n");
  Poly1 lhs = eulerian(n, r).shifted(Rational(1));
  std::vector<Integer> c;
  for (int k = 0; k <= n - r; ++k) c.push_back(factorial(n - k) * stirling2(n + 1 - r, n + 1 - r - k));
  return compare(lhs, from_integers(c), "n=" + std::to_string(n) + " r=" + std::to_string(r) + " (variable s = t-1)");
}

Witness worpitzky(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("worpitzky needs m, n >= 1");
  auto a = integer_coeffs(eulerian(n, 1));
  Integer lhs = 0;
  for (int s = 0; s < static_cast<int>(a.size()); ++s) lhs += binomial(m + s, n) * a[s];
  return compare(lhs, power(Integer(m), static_cast<unsigned long>(n)),
                 "m=" + std::to_string(m) + " n=" + std::to_string(n));
}

Witness worpitzky_generalized(int m, int n, int r) {
  if (r < 1 || r > n || r > m) throw DomainError("generalized worpitzky needs 1 <= r <= min(m, n)");
  auto a = integer_coeffs(eulerian(n, r));
  Integer lhs = 0;
  for (int s = 0; s <= n - r; ++s) {
    int k = n - r - s;
    if (k < static_cast<int>(a.size())) lhs += a[k] * binomial(m + s, n);
  }
  Integer rhs = power(Integer(m), static_cast<unsigned long>(n - r)) * factorial(m) / factorial(m - r);
  return compare(lhs, rhs, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
}

Integer count_monotone_maps(int m, int n, const std::vector<int>& distinguished) {
  const int s = static_cast<int>(distinguished.size());
  if (n < 1 || m < 0 || s >= n || n > m + s) throw DomainError("monotone maps need 0 <= s < n <= m+s");
  std::vector<bool> mark(static_cast<size_t>(n) + 1, false);
  for (int i = 0; i < s; ++i) {
    int d = distinguished[i];
    if (d < 1 || d > n - 1) throw DomainError("distinguished index outside [n-1]");
    if (i > 0 && distinguished[i - 1] <= d) throw DomainError("distinguished indices must strictly decrease");
    mark[d] = true;
  }
  long long count = 0;
  std::function<void(int, int)> go = [&](int i, int prev) {
    if (i > n) {
      ++count;
      return;
    }
    int lo = i == 1 ? 1 : (mark[i - 1] ? prev : prev + 1);
    for (int v = lo; v <= m; ++v) go(i + 1, v);
  };
  go(1, 0);
  return Integer(std::to_string(count));
}

Witness newcomb_specialization(int n, int r, const Budget& budget) {
  if (r < 2 || r > n) throw DomainError("newcomb specialization needs 2 <= r <= n");
  Poly1 sum = class_polynomial(
      n, ClassTag::tail_ordered(r), [](const Permutation& p) { return positive_count(delta(descent_vector(p))); },
      Execution::Parallel, budget);
  Poly1 lhs = sum.scaled_by(Rational(factorial(r)));
  return compare(lhs, eulerian(n, r).reciprocal(n - r), "n=" + std::to_string(n) + " r=" + std::to_string(r));
}

Poly1 roselle_polynomial(int n, RoselleVia via, Execution ex, const Budget& budget) {
  if (n < 1) throw DomainError("roselle polynomial needs n >= 1");
  if (via == RoselleVia::ExcedanceOnDerangements)
    return class_polynomial(
        n, ClassTag::Kind::Derangement, [](const Permutation& p) { return positive_count(excedance_vector(p)); }, ex,
        budget);
  return class_polynomial(
      n, ClassTag::Kind::SuccessionFree, [](const Permutation& p) { return positive_count(rise_vector(p)); }, ex, budget);
}

Poly1 roselle_from_eulerian(int n) {
  if (n < 0) throw DomainError("negative size");
  Poly1 sum;
  for (int k = 0; k <= n; ++k) {
    Poly1 term = eulerian(k, 1).scaled_by(Rational(binomial(n, k)));
    sum = (n - k) % 2 ? sum - term : sum + term;
  }
  return sum;
}

Poly2 abar_polynomial(int n, Execution ex, const Budget& budget) {
  if (n < 0) throw DomainError("negative size");
  if (n == 0) return Poly2(1);
  static std::mutex mu;
  static std::map<int, Poly2> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly2 result = class_polynomial2(
      n, ClassTag::Kind::All,
      [](const Permutation& p) {
        auto e = excedance_vector(p);
        return std::pair<int, int>(positive_count(fixed_point_vector(p)), positive_count(delta(e)));
      },
      ex, budget);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, result);
  return result;
}

Witness abar_specializations(int n, const Budget& budget) {
  Poly2 a = abar_polynomial(n, Execution::Parallel, budget);
  std::vector<Poly1> lhs{a.eval(kT), a.eval(kOne), a.eval(Poly1())};
  std::vector<Poly1> rhs{eulerian(n, 0), eulerian(n, 1), n == 0 ? kOne : roselle_polynomial(n, RoselleVia::ExcedanceOnDerangements, Execution::Parallel, budget)};
  auto join = [](const std::vector<Poly1>& v) {
    return to_string(v[0]) + " | " + to_string(v[1]) + " | " + to_string(v[2]);
  };
  return Witness{lhs == rhs, join(lhs), join(rhs), "n=" + std::to_string(n) + " at t'=t, 1, 0"};
}

Poly2 q_polynomial(int n, Execution ex, const Budget& budget) {
  if (n < 0) throw DomainError("negative size");
  if (n == 0) return Poly2(1);
  return class_polynomial2(
      n, ClassTag::Kind::All,
      [](const Permutation& p) {
        return std::pair<int, int>(cycle_count(p), positive_count(delta(excedance_vector(p))));
      },
      ex, budget);
}

Witness q_eulerian_identity(int n, int r, const Budget& budget) {
  if (n < 1 || r < 1) throw DomainError("q identity needs n, r >= 1");
  Poly1 rhs = q_polynomial(n, Execution::Parallel, budget).eval(Poly1(r)).scaled_by(Rational(factorial(r - 1)));
  return compare(eulerian(n + r - 1, r), rhs, "n=" + std::to_string(n) + " r=" + std::to_string(r));
}

Witness q_saillant_identity(int n, const Budget& budget) {
  if (n < 1) throw DomainError("q identity needs n >= 1");
  Poly2 lhs = class_polynomial2(
      n, ClassTag::Kind::All,
      [](const Permutation& p) { return std::pair<int, int>(saillant_count(p), positive_count(rise_vector(p))); },
      Execution::Parallel, budget);
  Poly2 rhs = q_polynomial(n, Execution::Parallel, budget).map([n](const Poly1& c) { return c.reciprocal(n); });
  return Witness{lhs == rhs, to_string(lhs, {"r", "t"}), to_string(rhs, {"r", "t"}), "n=" + std::to_string(n)};
}

Poly1 injection_interpretation(int n, int r, const Budget& budget) {
  require_shift(n, r);
  require_within(n, budget.max_n, "enumeration");
  const int len = n - r;
  std::vector<long long> counts(static_cast<size_t>(n) + 1, 0);
  std::vector<int> phi;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  std::function<void()> go = [&]() {
    if (static_cast<int>(phi.size()) == len) {
      std::vector<int> e(phi.size());
      for (int k = 1; k <= len; ++k) e[k - 1] = phi[k - 1] - (k - 1);
      StatVector v(std::move(e));
      for (int i = 0; i < r; ++i) v = lambda_op(v);
      ++counts[positive_count(v)];
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      phi.push_back(x);
      go();
      phi.pop_back();
      used[x] = false;
    }
  };
  go();
  return from_counts(counts);
}

Integer eval_at_minus_one(int n, WhichPoly which) {
  if (n < 1) throw DomainError("evaluation needs n >= 1");
  Poly1 p = which == WhichPoly::A ? eulerian(n, 1) : roselle_from_eulerian(n);
  Rational v = p.eval(Rational(-1));
  return v.get_num();
}

}  // namespace eulerian
