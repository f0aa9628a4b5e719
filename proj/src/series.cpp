#include "eulerian/series.hpp"

namespace eulerian {

namespace {

const Poly1 kT = Poly1::var();
const Poly1 kOne(1);

// exp(a·u) = Σ aⁿuⁿ/n!.
template <class R>
Series<R> exp_linear(const R& a, int N) {
  Series<R> s(N);
  R power(1);
  for (int n = 0; n <= N; ++n) {
    s[n] = scaled(power, Rational(1) / Rational(factorial(n)));
    power = power * a;
  }
  return s;
}

Poly1 divide_one_minus_t(const Poly1& p) { return exact_quotient(p, kOne - kT); }
Poly2 divide_one_minus_t(const Poly2& p) {
  return p.map([](const Poly1& c) { return divide_one_minus_t(c); });
}

// (1-t)/D where D has constant term 1-t: divide D by 1-t, then invert.
template <class R>
Series<R> one_minus_t_over(const Series<R>& denominator) {
  return reciprocal(denominator.map([](const R& c) { return divide_one_minus_t(c); }));
}

Witness first_failure(std::initializer_list<Witness> checks) {
  for (const auto& w : checks)
    if (!w.ok) return w;
  return *checks.begin();
}

}  // namespace

SeriesT eulerian_egf(int N, int r) {
  if (r < 1) throw DomainError("eulerian EGF needs r >= 1");
  SeriesT s(N);
  for (int m = 0; m <= N; ++m) s[m] = eulerian(m + r - 1, r).scaled_by(Rational(1) / Rational(factorial(m)));
  return s;
}

SeriesTT abar_egf(int N, const Budget& budget) {
  return egf_from_polynomials<Poly2>([&](int n) { return abar_polynomial(n, Execution::Parallel, budget); }, N);
}

SeriesTT closed_form_abar(int N) {
  const Poly2 t = lift(kT), tp = Poly2::var(), one(1);
  SeriesTT denominator = exp_linear<Poly2>(t - tp, N) - exp_linear<Poly2>(one - tp, N).times(t);
  return one_minus_t_over(denominator);
}

SeriesT closed_form_zero_shift(int N) {
  SeriesT denominator = SeriesT::one(N) - exp_linear<Poly1>(kOne - kT, N).times(kT);
  return one_minus_t_over(denominator);
}

SeriesT closed_form_eulerian(int N) {
  SeriesT denominator = exp_linear<Poly1>(kT - kOne, N) - SeriesT::one(N).times(kT);
  return one_minus_t_over(denominator);
}

SeriesT closed_form_roselle(int N) {
  SeriesT denominator = exp_linear<Poly1>(kT, N) - exp_linear<Poly1>(kOne, N).times(kT);
  return one_minus_t_over(denominator);
}

Witness verify_abar_exponential(int N, const Budget& budget) {
  SeriesTT lhs = abar_egf(N, budget);
  SeriesTT exponent = SeriesTT::linear(N, Poly2::var());
  for (int n = 2; n <= N; ++n)
    exponent[n] = lift((kT * eulerian(n - 1, 1)).scaled_by(Rational(1) / Rational(factorial(n))));
  return compare_series(lhs, exp(exponent), "order " + std::to_string(N));
}

std::string to_string(ClosedForm f) {
  switch (f) {
    case ClosedForm::Abar: return "abar";
    case ClosedForm::ZeroShift: return "zero-shift";
    case ClosedForm::Eulerian: return "eulerian";
    case ClosedForm::Roselle: return "roselle";
  }
  return "?";
}

Witness verify_closed_form(ClosedForm f, int N, const Budget& budget) {
  if (f == ClosedForm::Abar) {
    const int M = std::min(N, budget.max_n);
    return compare_series(closed_form_abar(M), abar_egf(M, budget), "against enumeration to order " + std::to_string(M));
  }
  SeriesTT general = closed_form_abar(N);
  switch (f) {
    case ClosedForm::ZeroShift: {
      SeriesT cf = closed_form_zero_shift(N);
      auto table = egf_from_polynomials<Poly1>([](int n) { return eulerian(n, 0); }, N);
      return first_failure({compare_series(cf, table, "against tables"),
                            compare_series(cf, general.map([](const Poly2& c) { return c.eval(kT); }), "against t'=t")});
    }
    case ClosedForm::Eulerian: {
      SeriesT cf = closed_form_eulerian(N);
      return first_failure({compare_series(cf, eulerian_egf(N, 1), "against tables"),
                            compare_series(cf, general.map([](const Poly2& c) { return c.eval(kOne); }), "against t'=1")});
    }
    case ClosedForm::Roselle: {
      SeriesT cf = closed_form_roselle(N);
      auto family = [&](int n) {
        if (n == 0) return kOne;
        if (n <= budget.max_n) return abar_polynomial(n, Execution::Parallel, budget).eval(Poly1());
        return roselle_from_eulerian(n);
      };
      return first_failure({compare_series(cf, egf_from_polynomials<Poly1>(family, N), "against derangement enumeration"),
                            compare_series(cf, general.map([](const Poly2& c) { return c.eval(Poly1()); }), "against t'=0")});
    }
    case ClosedForm::Abar: break;
  }
  throw DomainError("unknown closed form");
}

std::string to_string(AbarRelation rel) {
  switch (rel) {
    case AbarRelation::Affine: return "affine";
    case AbarRelation::ExpC: return "exp-c";
    case AbarRelation::Exponential: return "exponential";
  }
  return "?";
}

Witness verify_abar_relation(AbarRelation rel, int N) {
  SeriesTT general = closed_form_abar(N);
  SeriesT at_t = general.map([](const Poly2& c) { return c.eval(kT); });
  SeriesT at_one = general.map([](const Poly2& c) { return c.eval(kOne); });
  switch (rel) {
    case AbarRelation::Affine:
      return compare_series(at_t, SeriesT::one(N) + (at_one - SeriesT::one(N)).times(kT));
    case AbarRelation::ExpC: {
      SeriesT c(N);
      for (int n = 2; n <= N; ++n) c[n] = (kT * eulerian(n - 1, 1)).scaled_by(Rational(1) / Rational(factorial(n)));
      return compare_series(exp(c), at_one * exp_linear<Poly1>(-kOne, N));
    }
    case AbarRelation::Exponential:
      return compare_series(at_t, exp_linear<Poly1>(kT - kOne, N) * at_one);
  }
  throw DomainError("unknown relation");
}

Witness verify_power_identity(int r, int N) {
  if (r < 1) throw DomainError("power identity needs r >= 1");
  SeriesT rhs = pow(eulerian_egf(N, 1), static_cast<unsigned>(r)).scaled_by(Rational(factorial(r - 1)));
  return compare_series(eulerian_egf(N, r), rhs, "r=" + std::to_string(r));
}

Poly1 eulerian_by_series(int n, int r) {
  if (r < 1 || n < r - 1) throw DomainError("series extraction needs r >= 1 and n >= r-1");
  const int N = n - r + 1;
  SeriesT power = pow(closed_form_eulerian(N), static_cast<unsigned>(r));
  return power[N].scaled_by(Rational(factorial(r - 1) * factorial(N)));
}

Witness verify_bernoulli(int N) {
  if (N < 1) throw DomainError("bernoulli check needs order >= 1");
  SeriesT a = eulerian_egf(N, 1);
  SeriesT rhs = a * (SeriesT::one(N) + (a - SeriesT::one(N)).times(kT));
  Witness ode = compare_series(a.derivative(), rhs.truncated(N - 1), "differential equation");
  if (!ode.ok) return ode;
  for (int n = 0; n + 1 <= N; ++n) {
    Poly1 sum;
    for (int m = 0; m <= n - 1; ++m) sum += (eulerian(m, 1) * eulerian(n - m, 1)).scaled_by(Rational(binomial(n, m)));
    Poly1 rec = eulerian(n, 1) + kT * sum;
    if (rec != eulerian(n + 1, 1))
      return Witness{false, to_string(eulerian(n + 1, 1)), to_string(rec), "convolution recurrence at n=" + std::to_string(n)};
  }
  return Witness{true, ode.lhs, ode.rhs, "differential equation and convolution recurrence"};
}

std::string to_string(const Weight& w) {
  switch (w.kind) {
    case Weight::Kind::CycleIndicator: {
      std::string s = "cycle-indicator(x=";
      for (size_t i = 0; i < w.x.size(); ++i) s += (i ? "," : "") + to_string(w.x[i]);
      return s + ")";
    }
    case Weight::Kind::ThetaPrime: return "theta-prime";
    case Weight::Kind::ThetaPrimeCycles: return "theta-prime-cycles(r=" + std::to_string(w.r) + ")";
    case Weight::Kind::Biexcedence: return "biexcedence";
    case Weight::Kind::Banded:
      return "banded(a=" + to_string(w.a) + ",b=" + to_string(w.b) + ",c=" + to_string(w.c) + ")";
  }
  return "?";
}

Term weigh(const Weight& w, const Permutation& p) {
  const int n = p.size();
  Term term{Rational(1), 0, 0};
  switch (w.kind) {
    case Weight::Kind::CycleIndicator:
      for (const auto& cycle : orbits(p)) {
        size_t len = cycle.size();
        if (len > w.x.size()) throw DomainError("cycle indicator has no value for cycle length " + std::to_string(len));
        term.coeff *= w.x[len - 1];
      }
      return term;
    case Weight::Kind::ThetaPrimeCycles:
      term.coeff = Rational(power(Integer(w.r), static_cast<unsigned long>(cycle_count(p))));
      [[fallthrough]];
    case Weight::Kind::ThetaPrime:
      for (int k = 1; k <= n; ++k) {
        term.tp += p(k) == k;
        term.t += p(k) > k;
      }
      return term;
    case Weight::Kind::Biexcedence:
      term.coeff = is_in_class(p, ClassTag::Kind::Biexcedent) ? 1 : 0;
      return term;
    case Weight::Kind::Banded:
      for (int k = 1; k <= n; ++k) term.coeff *= k < p(k) ? w.a : (k == p(k) ? w.b : w.c);
      return term;
  }
  return term;
}

namespace {

struct WeightSums {
  int n = 0;
  std::vector<Rational> all, cyclic, signed_all;  // indexed tp*(n+1)+t
  long long mismatches = 0;

  explicit WeightSums(int size = 0)
      : n(size),
        all(static_cast<size_t>((size + 1) * (size + 1)), 0),
        cyclic(all.size(), 0),
        signed_all(all.size(), 0) {}

  static Poly2 to_poly(const std::vector<Rational>& grid, int n) {
    std::vector<Poly1> outer;
    for (int tp = 0; tp <= n; ++tp)
      outer.emplace_back(std::vector<Rational>(grid.begin() + tp * (n + 1), grid.begin() + (tp + 1) * (n + 1)));
    return Poly2(std::move(outer));
  }
};

WeightSums weigh_class(const Weight& w, int n, const Budget& budget) {
  auto visit = [&](WeightSums& acc, const Permutation& p) {
    Term product{Rational(1), 0, 0};
    for (const auto& f : canonical_factorization(FunctionMap::of(p))) {
      Term part = weigh(w, Permutation::trusted(f.map.image));
      product.coeff *= part.coeff;
      product.tp += part.tp;
      product.t += part.t;
    }
    Term direct = weigh(w, p);
    if (direct.coeff != product.coeff || (!is_zero(direct.coeff) && (direct.tp != product.tp || direct.t != product.t)))
      ++acc.mismatches;
    if (is_zero(product.coeff)) return;
    size_t slot = static_cast<size_t>(product.tp * (n + 1) + product.t);
    acc.all[slot] += product.coeff;
    if (signature(p) > 0)
      acc.signed_all[slot] += product.coeff;
    else
      acc.signed_all[slot] -= product.coeff;
    if (cycle_count(p) == 1) acc.cyclic[slot] += product.coeff;
  };
  auto merge = [](WeightSums a, const WeightSums& b) {
    for (size_t i = 0; i < a.all.size(); ++i) {
      a.all[i] += b.all[i];
      a.cyclic[i] += b.cyclic[i];
      a.signed_all[i] += b.signed_all[i];
    }
    a.mismatches += b.mismatches;
    return a;
  };
  return reduce_class(n, ClassTag::Kind::All, WeightSums(n), visit, merge, Execution::Parallel, budget);
}

}  // namespace

Witness verify_exponential_formula(const Weight& w, int N, const Budget& budget) {
  require_within(N, budget.max_n, "enumeration");
  SeriesTT all = SeriesTT::one(N), cyclic(N), signed_all = SeriesTT::one(N);
  long long mismatches = 0;
  for (int n = 1; n <= N; ++n) {
    WeightSums sums = weigh_class(w, n, budget);
    Rational inv = Rational(1) / Rational(factorial(n));
    all[n] = WeightSums::to_poly(sums.all, n).scaled_by(inv);
    cyclic[n] = WeightSums::to_poly(sums.cyclic, n).scaled_by(inv);
    signed_all[n] = WeightSums::to_poly(sums.signed_all, n).scaled_by(inv);
    mismatches += sums.mismatches;
  }
  const std::string params = to_string(w) + " order " + std::to_string(N);
  if (mismatches)
    return Witness{false, std::to_string(mismatches) + " permutations", "0",
                   "weight is not multiplicative over canonical factors: " + params};
  Witness direct = compare_series(all, exp(cyclic), "exponential formula: " + params);
  Witness inverse = compare_series(signed_all.negated_argument(), exp(-cyclic), "signed inverse: " + params);
  Witness extra{true, "", "", ""};
  if (w.kind == Weight::Kind::CycleIndicator) {
    SeriesTT expected(N);
    for (int n = 1; n <= N && n <= static_cast<int>(w.x.size()); ++n)
      expected[n] = Poly2::constant(Poly1::constant(w.x[n - 1] / Rational(n)));
    extra = compare_series(cyclic, expected, "cyclic sums x_n/n: " + params);
  } else if (w.kind == Weight::Kind::Banded) {
    SeriesTT expected = SeriesTT::one(N);
    for (int n = 1; n <= N; ++n) {
      auto m = Matrix<Rational>::banded(n, w.a, w.b, w.c);
      expected[n] = Poly2::constant(Poly1::constant(permanent(m, std::max(N, budget.permanent_max)) / Rational(factorial(n))));
    }
    extra = compare_series(all, expected, "sums are permanents: " + params);
  } else if (w.kind == Weight::Kind::Biexcedence) {
    for (int n = 2; n <= N; n += 2) {
      long long alt_first = 0;
      for_each_in_class(
          n, ClassTag::Kind::Alternating, [&](const Permutation& p) { alt_first += p(1) == n; }, budget);
      Rational got = cyclic[n].coeff(0).coeff(0) * Rational(factorial(n));
      if (got != Rational(static_cast<long>(alt_first))) {
        extra = Witness{false, to_string(got), std::to_string(alt_first), "cyclic biexcedent count n=" + std::to_string(n)};
        break;
      }
    }
  }
  if (!direct.ok) return direct;
  if (!inverse.ok) return inverse;
  if (!extra.ok) return extra;
  return direct;
}

Witness verify_cycle_power_weight(int r, int N, const Budget& budget) {
  if (r < 1) throw DomainError("cycle power weight needs r >= 1");
  require_within(N, budget.max_n, "enumeration");
  SeriesTT lhs = SeriesTT::one(N);
  Weight w = Weight::theta_prime_cycles(r);
  for (int n = 1; n <= N; ++n)
    lhs[n] = WeightSums::to_poly(weigh_class(w, n, budget).all, n).scaled_by(Rational(1) / Rational(factorial(n)));
  return compare_series(lhs, pow(closed_form_abar(N), static_cast<unsigned>(r)), "r=" + std::to_string(r));
}

Integer ultimately_idempotent_count(int n, const Budget& budget) {
  if (n < 0) throw DomainError("negative size");
  if (n <= budget.fn_scan_max) return count_class_functions(n, FunctionKind::UltimatelyIdempotent, budget);
  return power(Integer(n + 1), static_cast<unsigned long>(n - 1));
}

Witness verify_arborescence_equation(int N, const Budget& budget) {
  for (int n = 1; n <= std::min(N, budget.fn_scan_max); ++n) {
    Integer scanned = count_class_functions(n, FunctionKind::UltimatelyIdempotent, budget);
    Integer cayley = power(Integer(n + 1), static_cast<unsigned long>(n - 1));
    if (scanned != cayley)
      return Witness{false, to_string(scanned), to_string(cayley), "scan against (n+1)^(n-1) at n=" + std::to_string(n)};
  }
  SeriesQ w(N);
  for (int n = 0; n <= N; ++n) w[n] = Rational(ultimately_idempotent_count(n, budget)) / Rational(factorial(n));
  SeriesQ uw(N);
  for (int n = 1; n <= N; ++n) uw[n] = w[n - 1];
  return compare_series(w, exp(uw), "order " + std::to_string(N));
}

Witness verify_arborescence_counts(const Budget& budget) {
  const int N = budget.fn_scan_max;
  SeriesQ u_egf(N), v_egf(N);
  for (int n = 0; n <= N; ++n) {
    Integer u = count_class_functions(n, FunctionKind::UltimatelyIdempotent, budget);
    Integer v = count_class_functions(n, FunctionKind::Arborescence, budget);
    if (n >= 1 && v != n * count_class_functions(n - 1, FunctionKind::UltimatelyIdempotent, budget))
      return Witness{false, to_string(v), "n * U_{n-1}", "arborescences at n=" + std::to_string(n)};
    u_egf[n] = Rational(u) / Rational(factorial(n));
    v_egf[n] = Rational(v) / Rational(factorial(n));
  }
  return compare_series(u_egf, exp(v_egf), "ultimately idempotent maps from arborescences");
}

Matrix<Rational> kittel_matrix(int n) {
  Matrix<Rational> m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i, j) = i <= j ? Rational(1) : (i - 1 == j ? Rational(-(i - 1)) : Rational(0));
  return m;
}

Matrix<Rational> zero_first_column_matrix(int n, const Rational& a, const Rational& b, const Rational& c) {
  auto m = Matrix<Rational>::banded(n, a, b, c);
  for (int i = 1; i <= n; ++i) m(i, 1) = 0;
  return m;
}

namespace {

Witness perdet_series(const std::function<Matrix<Rational>(int)>& make, int N, int permanent_max, SeriesQ& inverse,
                      std::vector<Rational>& pers, std::vector<Rational>& dets) {
  SeriesQ p = SeriesQ::one(N), d = SeriesQ::one(N);
  pers.assign(static_cast<size_t>(N) + 1, 1);
  dets.assign(static_cast<size_t>(N) + 1, 1);
  for (int n = 1; n <= N; ++n) {
    auto m = make(n);
    pers[n] = permanent(m, permanent_max);
    dets[n] = determinant(m);
    p[n] = pers[n] / Rational(factorial(n));
    d[n] = dets[n] / Rational(factorial(n));
  }
  inverse = reciprocal(p);
  return compare_series(inverse, d.negated_argument(), "inverse of permanent series");
}

}  // namespace

Witness verify_perdet_identity(const Rational& a, const Rational& b, const Rational& c, int N, int permanent_max) {
  SeriesQ inverse;
  std::vector<Rational> pers, dets;
  const std::string params = "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
  Witness main = perdet_series([&](int n) { return Matrix<Rational>::banded(n, a, b, c); }, N, permanent_max, inverse,
                               pers, dets);
  if (!main.ok) return Witness{false, main.lhs, main.rhs, main.detail + " " + params};
  for (int n = 1; n <= N; ++n) {
    Rational closed;
    if (c != a) {
      Rational pb = 1, pc = 1;
      for (int i = 0; i < n; ++i) {
        pb *= b - a;
        pc *= b - c;
      }
      closed = (c * pb - a * pc) / (c - a);
    } else {
      Rational pb = 1;
      for (int i = 0; i < n - 1; ++i) pb *= b - a;
      closed = pb * (b + (n - 1) * a);
    }
    if (closed != dets[n])
      return Witness{false, to_string(dets[n]), to_string(closed), "determinant closed form n=" + std::to_string(n) + " " + params};
  }
  if (c != a) {
    SeriesQ closed = (exp_linear<Rational>(a - b, N).times(c) - exp_linear<Rational>(c - b, N).times(a))
                         .scaled_by(Rational(1) / (c - a));
    return compare_series(inverse, closed, "exponential closed form (c != a) " + params);
  }
  if (a != b) {
    SeriesQ factor = SeriesQ::one(N) - SeriesQ::linear(N, a);
    return compare_series(inverse, factor * exp_linear<Rational>(a - b, N), "exponential closed form (c = a) " + params);
  }
  return Witness{true, main.lhs, main.rhs, "a = b = c, no exponential closed form " + params};
}

Witness verify_special_matrix(SpecialMatrix which, int N, int permanent_max) {
  SeriesQ inverse;
  std::vector<Rational> pers, dets;
  if (which == SpecialMatrix::Kittel) {
    Witness main = perdet_series(kittel_matrix, N, permanent_max, inverse, pers, dets);
    if (!main.ok) return main;
    for (int n = 1; n <= N; ++n) {
      if (pers[n] != (n == 1 ? 1 : 0))
        return Witness{false, to_string(pers[n]), n == 1 ? "1" : "0", "kittel permanent n=" + std::to_string(n)};
      if (dets[n] != Rational(factorial(n)))
        return Witness{false, to_string(dets[n]), to_string(factorial(n)), "kittel determinant n=" + std::to_string(n)};
    }
    SeriesQ alternating(N);
    for (int n = 0; n <= N; ++n) alternating[n] = n % 2 ? -1 : 1;
    return compare_series(inverse, alternating, "(1+u)^-1 from the kittel matrix");
  }
  Witness main = perdet_series([](int n) { return zero_first_column_matrix(n, 2, 3, 5); }, N, permanent_max, inverse,
                               pers, dets);
  if (!main.ok) return main;
  for (int n = 1; n <= N; ++n)
    if (pers[n] != 0 || dets[n] != 0)
      return Witness{false, to_string(pers[n]) + ", " + to_string(dets[n]), "0, 0",
                     "zero first column n=" + std::to_string(n)};
  return Witness{true, main.lhs, main.rhs, "zero first column: permanent and determinant vanish"};
}

Witness verify_banded_permanent_abar(int n, const Budget& budget) {
  auto m = Matrix<Poly2>::banded(n, lift(kT), Poly2::var(), Poly2(1));
  return compare(permanent(m, budget.permanent_max), abar_polynomial(n, Execution::Parallel, budget),
                 "n=" + std::to_string(n));
}

TanSec tan_sec_series(int N) {
  if (N < 1) throw DomainError("tan/sec needs order >= 1");
  const Rational minus_one(-1);
  SeriesQ a = closed_form_eulerian(N).map([&](const Poly1& c) { return c.eval(minus_one); });
  SeriesQ b = closed_form_roselle(N).map([&](const Poly1& c) { return c.eval(minus_one); });
  TanSec out{SeriesQ(N), SeriesQ(N)};
  out.sec[0] = 1;
  for (int n = 1; n <= N; ++n) {
    if (n % 2) {
      // i^n = i·(-1)^{(n-1)/2}: odd terms give the tangent.
      out.tan[n] = ((n - 1) / 2) % 2 ? Rational(-a[n]) : a[n];
      if (!is_zero(b[n])) throw ConsistencyError("odd Roselle value at -1 is nonzero, n=" + std::to_string(n));
    } else {
      out.sec[n] = (n / 2) % 2 ? Rational(-b[n]) : b[n];
      if (!is_zero(a[n])) throw ConsistencyError("even Eulerian value at -1 is nonzero, n=" + std::to_string(n));
    }
  }
  return out;
}

Witness verify_tan_sec(int N) {
  TanSec ts = tan_sec_series(N);
  SeriesQ sin(N), cos(N);
  for (int n = 0; n <= N; ++n) {
    Rational inv = Rational(1) / Rational(factorial(n));
    if (n % 2)
      sin[n] = ((n - 1) / 2) % 2 ? Rational(-inv) : inv;
    else
      cos[n] = (n / 2) % 2 ? Rational(-inv) : inv;
  }
  return first_failure({compare_series(ts.tan * cos, sin, "tan·cos = sin"),
                        compare_series(ts.sec * cos, SeriesQ::one(N), "sec·cos = 1"),
                        compare_series(ts.sec, exp(ts.tan.integral()), "sec = exp(∫tan)")});
}

}  // namespace eulerian
