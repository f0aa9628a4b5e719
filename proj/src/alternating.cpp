#include "eulerian/alternating.hpp"

#include "eulerian/series.hpp"

namespace eulerian {

namespace {

constexpr Letter kD = Letter::Descent;
constexpr Letter kDbar = Letter::MarkedDescent;
constexpr Letter kM = Letter::Rise;
constexpr Letter kMbar = Letter::MarkedRise;

void add(WordWeightedSet& ws, VWord w, const Integer& k) {
  if (k == 0) return;
  auto [it, fresh] = ws.try_emplace(std::move(w), k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) ws.erase(it);
  }
}

void add(CommutativeSet& cs, const Monomial& m, const Integer& k) {
  if (k == 0) return;
  auto [it, fresh] = cs.try_emplace(m, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) cs.erase(it);
  }
}

Integer total(const WordWeightedSet& ws) {
  Integer s = 0;
  for (const auto& [w, k] : ws) s += k;
  return s;
}

std::string summary(const WordWeightedSet& ws) {
  return std::to_string(ws.size()) + " words, total " + to_string(total(ws));
}

// Reports the smallest word whose multiplicity differs.
Witness compare_word_sets(const WordWeightedSet& lhs, const WordWeightedSet& rhs, const std::string& detail) {
  auto a = lhs.begin(), b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->first < b->first))
      return Witness{false, to_string(a->second) + "·" + to_string(a->first), "0·" + to_string(a->first), detail};
    if (a == lhs.end() || b->first < a->first)
      return Witness{false, "0·" + to_string(b->first), to_string(b->second) + "·" + to_string(b->first), detail};
    if (a->second != b->second)
      return Witness{false, to_string(a->second) + "·" + to_string(a->first),
                     to_string(b->second) + "·" + to_string(b->first), detail};
    ++a;
    ++b;
  }
  return Witness{true, summary(lhs), summary(rhs), detail};
}

std::string monomial_string(const Monomial& m) {
  static const char* names[] = {"d", "D", "m", "M"};
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (m[i]) s += names[i] + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  return s.empty() ? "1" : s;
}

Witness compare_commutative(const CommutativeSet& lhs, const CommutativeSet& rhs, const std::string& detail) {
  for (const auto& [m, k] : lhs) {
    auto it = rhs.find(m);
    Integer other = it == rhs.end() ? Integer(0) : it->second;
    if (other != k) return Witness{false, to_string(k) + "·" + monomial_string(m), to_string(other) + "·" + monomial_string(m), detail};
  }
  for (const auto& [m, k] : rhs)
    if (!lhs.count(m)) return Witness{false, "0·" + monomial_string(m), to_string(k) + "·" + monomial_string(m), detail};
  return Witness{true, std::to_string(lhs.size()) + " monomials", std::to_string(rhs.size()) + " monomials", detail};
}

}  // namespace

std::string to_string(Letter x) {
  switch (x) {
    case Letter::Descent: return "d";
    case Letter::MarkedDescent: return "D";
    case Letter::Rise: return "m";
    case Letter::MarkedRise: return "M";
  }
  return "?";
}

std::string to_string(const VWord& w) {
  std::string s;
  for (Letter x : w) s += to_string(x);
  return s;
}

VWord parse_vword(std::string_view text) {
  VWord w;
  for (size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'd': w.push_back(kD); break;
      case 'D': w.push_back(kDbar); break;
      case 'm': w.push_back(kM); break;
      case 'M': w.push_back(kMbar); break;
      case ' ': break;
      default: throw DomainError("bad letter '" + std::string(1, text[i]) + "' at position " + std::to_string(i + 1));
    }
  }
  return w;
}

VWord v_word(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw DomainError("V-word needs n >= 2");
  if (p(1) != n) throw DomainError("V-word requires a permutation starting with n (class first-is-n)");
  auto next = [&](int j) { return j == n ? p(1) : p(j + 1); };
  auto descends = [&](int j) { return p(j) > next(j); };
  VWord w(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (descends(j))
      w[j - 1] = j < n && !descends(j + 1) ? kDbar : kD;
    else
      w[j - 1] = j > 1 && descends(j - 1) ? kMbar : kM;
  }
  return w;
}

WordWeightedSet v_words(int n, Execution ex, const Budget& budget) {
  auto visit = [](WordWeightedSet& ws, const Permutation& p) { add(ws, v_word(p), 1); };
  auto merge = [](WordWeightedSet a, const WordWeightedSet& b) {
    for (const auto& [w, k] : b) add(a, w, k);
    return a;
  };
  return reduce_class(n, ClassTag::Kind::FirstIsN, WordWeightedSet{}, visit, merge, ex, budget);
}

WordWeightedSet derive(const WordWeightedSet& ws, Letter x, const VWord& g) {
  WordWeightedSet out;
  for (const auto& [w, k] : ws)
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != x) continue;
      VWord image(w.begin(), w.begin() + static_cast<long>(i));
      image.insert(image.end(), g.begin(), g.end());
      image.insert(image.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      add(out, std::move(image), k);
    }
  return out;
}

WordWeightedSet nabla(const WordWeightedSet& ws) {
  WordWeightedSet out;
  const std::pair<Letter, VWord> terms[] = {
      {kDbar, {kD, kDbar}}, {kMbar, {kMbar, kM}}, {kD, {kDbar, kMbar}}, {kM, {kDbar, kMbar}}};
  for (const auto& [x, g] : terms)
    for (const auto& [w, k] : derive(ws, x, g)) add(out, w, k);
  return out;
}

Witness verify_nabla_generates(int n, const Budget& budget) {
  if (n < 3) throw DomainError("nabla check needs n >= 3");
  require_within(n, budget.max_n, "enumeration");
  return compare_word_sets(v_words(n, Execution::Parallel, budget), nabla(v_words(n - 1, Execution::Parallel, budget)),
                           "n=" + std::to_string(n));
}

CommutativeSet abelianize(const WordWeightedSet& ws) {
  CommutativeSet out;
  for (const auto& [w, k] : ws) {
    Monomial m{};
    for (Letter x : w) ++m[static_cast<size_t>(x)];
    add(out, m, k);
  }
  return out;
}

CommutativeSet nabla(const CommutativeSet& cs) {
  CommutativeSet out;
  for (const auto& [m, k] : cs) {
    auto [d, dbar, r, rbar] = m;
    if (dbar) add(out, {d + 1, dbar, r, rbar}, k * dbar);
    if (rbar) add(out, {d, dbar, r + 1, rbar}, k * rbar);
    if (d) add(out, {d - 1, dbar + 1, r, rbar + 1}, k * d);
    if (r) add(out, {d, dbar + 1, r - 1, rbar + 1}, k * r);
  }
  return out;
}

Witness verify_nabla_commutes(int n, const Budget& budget) {
  if (n < 3) throw DomainError("nabla check needs n >= 3");
  WordWeightedSet prev = v_words(n - 1, Execution::Parallel, budget);
  return compare_commutative(abelianize(nabla(prev)), nabla(abelianize(prev)), "n=" + std::to_string(n));
}

std::vector<std::vector<Integer>> c_triangle(int n, CTriangleMode mode, const Budget& budget) {
  if (n < 2) throw DomainError("c triangle needs n >= 2");
  std::vector<std::vector<Integer>> c(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) c[m].assign(static_cast<size_t>(m) + 1, 0);
  if (mode == CTriangleMode::Recurrence) {
    c[2][1] = 1;
    for (int m = 3; m <= n; ++m)
      for (int k = 1; 2 * k <= m; ++k) {
        c[m][k] = k * c[m - 1][k];
        if (2 * (k - 1) >= 2) c[m][k] += 2 * (m + 1 - 2 * k) * c[m - 1][k - 1];
      }
    return c;
  }
  require_within(n, budget.max_n, "enumeration");
  for (int m = 2; m <= n; ++m) {
    CommutativeSet cs = abelianize(v_words(m, Execution::Parallel, budget));
    CommutativeSet expected;
    for (int k = 1; 2 * k <= m; ++k) {
      auto it = cs.find(Monomial{0, k, m - 2 * k, k});
      if (it == cs.end()) continue;
      c[m][k] = it->second;
      for (int a = 0; a <= m - 2 * k; ++a) expected[Monomial{a, k, m - 2 * k - a, k}] = it->second * binomial(m - 2 * k, a);
    }
    Witness shape = compare_commutative(cs, expected, "");
    if (!shape.ok)
      throw ConsistencyError("abelianized V-words of size " + std::to_string(m) + " are not of the form Σ c (d̄m̄)^k (d+m)^(n-2k): " +
                             shape.lhs + " vs " + shape.rhs);
  }
  return c;
}

Witness verify_c_triangle_identity(int n) {
  if (n < 2) throw DomainError("c triangle identity needs n >= 2");
  auto c = c_triangle(n);
  const Poly1 t = Poly1::var(), one_plus_t = Poly1(1) + Poly1::var();
  Poly1 rhs;
  for (int k = 1; 2 * k <= n; ++k) rhs += (t.pow(k) * one_plus_t.pow(n - 2 * k)).scaled_by(Rational(c[n][k]));
  return compare(t * eulerian(n - 1, 1), rhs, "n=" + std::to_string(n));
}

Witness verify_descent_letters(int n, const Budget& budget) {
  long long bad = 0;
  std::string example;
  for_each_in_class(
      n, ClassTag::Kind::FirstIsN,
      [&](const Permutation& p) {
        VWord w = v_word(p);
        long long letters = std::count(w.begin(), w.end(), kD) + std::count(w.begin(), w.end(), kDbar);
        if (letters != positive_count(delta(descent_vector(p))) && bad++ == 0) example = to_string(p);
      },
      budget);
  if (bad) return Witness{false, std::to_string(bad) + " mismatches", "0", "n=" + std::to_string(n) + ", first at " + example};
  return Witness{true, "0 mismatches", "0", "n=" + std::to_string(n)};
}

std::vector<Integer> euler_numbers(int N, EulerMode mode, const Budget& budget) {
  if (N < 0) throw DomainError("negative index");
  std::vector<Integer> t(static_cast<size_t>(N) + 1, 0);
  t[0] = 1;
  switch (mode) {
    case EulerMode::Enumeration:
      require_within(N, std::min(budget.max_n, 10), "enumeration");
      for (int n = 1; n <= N; ++n) t[n] = static_cast<long>(count_class(n, ClassTag::Kind::Alternating, budget));
      break;
    case EulerMode::CTriangle: {
      auto c = c_triangle(std::max(N + 1, 2));
      for (int n = 1; n <= N; ++n) {
        if (n % 2) {
          t[n] = c[n + 1][(n + 1) / 2];
        } else {
          Integer b = eval_at_minus_one(n, WhichPoly::B);
          t[n] = (n / 2) % 2 ? Integer(-b) : b;
        }
      }
      break;
    }
    case EulerMode::Series: {
      TanSec ts = tan_sec_series(std::max(N, 1));
      for (int n = 1; n <= N; ++n) {
        Rational v = (n % 2 ? ts.tan[n] : ts.sec[n]) * Rational(factorial(n));
        if (!is_integral(v)) throw ConsistencyError("non-integral tan/sec coefficient at n=" + std::to_string(n));
        t[n] = v.get_num();
      }
      break;
    }
  }
  return t;
}

Witness verify_eulerian_alternating(int p, const Budget& budget) {
  if (p < 1) throw DomainError("needs p >= 1");
  const std::string tag = " p=" + std::to_string(p);
  Integer even = eval_at_minus_one(2 * p, WhichPoly::A);
  if (even != 0) return Witness{false, to_string(even), "0", "A_{2p}(-1)" + tag};
  Integer odd = eval_at_minus_one(2 * p - 1, WhichPoly::A);
  if (p % 2 == 0) odd = -odd;
  Integer c = c_triangle(2 * p)[2 * p][p];
  if (odd != c) return Witness{false, to_string(odd), to_string(c), "(-1)^{p-1} A_{2p-1}(-1) against c_{2p,p}" + tag};
  if (2 * p - 1 <= std::min(budget.max_n, 10)) {
    Integer counted = static_cast<long>(count_class(2 * p - 1, ClassTag::Kind::Alternating, budget));
    if (odd != counted) return Witness{false, to_string(odd), to_string(counted), "against alternating count" + tag};
  }
  return Witness{true, to_string(odd), to_string(c), "A at -1" + tag};
}

Witness verify_alternating_words(int p, const Budget& budget) {
  if (p < 1) throw DomainError("needs p >= 1");
  const int n = 2 * p;
  VWord target;
  for (int i = 0; i < p; ++i) {
    target.push_back(kDbar);
    target.push_back(kMbar);
  }
  long long by_word = 0, by_class = 0, disagree = 0;
  for_each_in_class(
      n, ClassTag::Kind::FirstIsN,
      [&](const Permutation& s) {
        bool w = v_word(s) == target, a = is_in_class(s, ClassTag::Kind::Alternating);
        by_word += w;
        by_class += a;
        disagree += w != a;
      },
      budget);
  const std::string detail = "p=" + std::to_string(p);
  if (disagree) return Witness{false, std::to_string(by_word), std::to_string(by_class), "word (D M)^p against alternating, " + detail};
  return compare(Integer(static_cast<long>(by_class)),
                 Integer(static_cast<long>(count_class(n - 1, ClassTag::Kind::Alternating, budget))),
                 "first-is-n alternating against size 2p-1, " + detail);
}

Witness verify_roselle_alternating(int p, const Budget& budget) {
  if (p < 1) throw DomainError("needs p >= 1");
  const int n = 2 * p;
  require_within(n, budget.max_n, "enumeration");
  const std::string tag = " p=" + std::to_string(p);
  Rational odd = roselle_polynomial(n - 1, RoselleVia::ExcedanceOnDerangements, Execution::Parallel, budget).eval(Rational(-1));
  if (odd != 0) return Witness{false, to_string(odd), "0", "B_{2p-1}(-1)" + tag};
  Rational even = roselle_polynomial(n, RoselleVia::ExcedanceOnDerangements, Execution::Parallel, budget).eval(Rational(-1));
  if (p % 2) even = -even;
  const long long alternating = count_class(n, ClassTag::Kind::Alternating, budget);
  if (even != Rational(static_cast<long>(alternating)))
    return Witness{false, to_string(even), std::to_string(alternating), "(-1)^p B_{2p}(-1)" + tag};
  const long long biexcedent = count_class(n, ClassTag::Kind::Biexcedent, budget);
  if (biexcedent != alternating)
    return Witness{false, std::to_string(biexcedent), std::to_string(alternating), "biexcedent count" + tag};
  if (long long odd_biexcedent = count_class(n - 1, ClassTag::Kind::Biexcedent, budget))
    return Witness{false, std::to_string(odd_biexcedent), "0", "biexcedent count at odd size" + tag};
  long long cyclic = 0;
  for_each_in_class(
      n, ClassTag::Kind::Circular, [&](const Permutation& s) { cyclic += is_in_class(s, ClassTag::Kind::Biexcedent); },
      budget);
  const long long shorter = count_class(n - 1, ClassTag::Kind::Alternating, budget);
  if (cyclic != shorter)
    return Witness{false, std::to_string(cyclic), std::to_string(shorter), "cyclic biexcedent against t_{2p-1}" + tag};
  return Witness{true, to_string(even), std::to_string(alternating), "all clauses" + tag};
}

Permutation descent_bridge(const Permutation& sigma) {
  const int n = sigma.size() + 1;
  std::vector<int> w{n};
  for (int j = 1; j <= n - 1; ++j) w.push_back(n - sigma(n - j));
  return Permutation(std::move(w));
}

std::vector<int> descent_bridge_printed(const Permutation& sigma) {
  const int n = sigma.size() + 1;
  std::vector<int> w{n};
  for (int j = 1; j <= n - 1; ++j) w.push_back(n + 1 - sigma(n - j));
  return w;
}

namespace {

template <class Lhs, class Rhs>
Witness bridge_check(int n, const Budget& budget, Lhs lhs, Rhs rhs, const std::string& what) {
  if (n < 2) throw DomainError("bridge needs n >= 2");
  long long bad = 0;
  std::string example;
  for_each_in_class(
      n - 1, ClassTag::Kind::All,
      [&](const Permutation& s) {
        VWord w = v_word(descent_bridge(s));
        if (lhs(w) != rhs(s) && bad++ == 0) example = to_string(s);
      },
      budget);
  if (bad) return Witness{false, std::to_string(bad) + " mismatches", "0", what + " n=" + std::to_string(n) + ", first at " + example};
  return Witness{true, "0 mismatches", "0", what + " n=" + std::to_string(n)};
}

}  // namespace

Witness verify_descent_bridge_letters(int n, const Budget& budget) {
  return bridge_check(
      n, budget, [](const VWord& w) { return std::count(w.begin(), w.end(), kD) + std::count(w.begin(), w.end(), kDbar); },
      [n](const Permutation& s) {
        long count = 1;
        for (int j = 1; j <= n - 1; ++j) count += s(j - 1) > s(j);
        return count;
      },
      "d letters against descents");
}

Witness verify_descent_bridge_valleys(int n, const Budget& budget) {
  return bridge_check(
      n, budget, [](const VWord& w) { return std::count(w.begin(), w.end(), kDbar); },
      [n](const Permutation& s) {
        long count = 1;
        for (int j = 1; j <= n - 2; ++j) count += s(j) > s(j + 1) && s(j + 1) < s(j + 2);
        return count;
      },
      "marked descents against valleys");
}

}  // namespace eulerian
