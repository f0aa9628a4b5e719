#include "eulerian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "eulerian/alternating.hpp"
#include "eulerian/certify.hpp"
#include "eulerian/series.hpp"

namespace eulerian::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kTableMaxN = 8;
constexpr int kTableMaxR = 5;
constexpr int kEulerRows = 14;

// Right-aligned columns, two spaces apart, no trailing blanks.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) line += (i ? "," : "") + csv_field(fields[i]);
  return line + "\n";
}

std::vector<std::string> decimal(const std::vector<Integer>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

Json poly_json(int n, std::optional<int> r, const Poly1& p) {
  Json j;
  j["n"] = n;
  if (r) j["r"] = *r;
  j["coeffs"] = decimal(integer_coeffs(p));
  return j;
}

}  // namespace

std::string eulerian_table(Format f, std::optional<int> only_r) {
  if (only_r && (*only_r < 1 || *only_r > kTableMaxR))
    throw DomainError("table r must lie in [1, " + std::to_string(kTableMaxR) + "]");
  const int r_lo = only_r.value_or(1), r_hi = only_r.value_or(kTableMaxR);
  std::ostringstream os;
  if (f == Format::Csv) {
    std::vector<std::string> header{"r", "n"};
    for (int k = 0; k < kTableMaxN; ++k) header.push_back("a_" + std::to_string(k));
    os << csv_line(header);
  }
  Json rows = Json::array();
  for (int r = r_lo; r <= r_hi; ++r) {
    std::vector<std::vector<std::string>> text{{"n\\k"}};
    for (int k = 0; k <= kTableMaxN - r; ++k) text[0].push_back(std::to_string(k));
    for (int n = r; n <= kTableMaxN; ++n) {
      Poly1 reduced = eulerian_reduced(n, r);
      auto cells = decimal(integer_coeffs(reduced));
      if (f == Format::Json) {
        rows.push_back(poly_json(n, r, reduced));
        continue;
      }
      std::vector<std::string> row{std::to_string(n)};
      row.insert(row.end(), cells.begin(), cells.end());
      if (f == Format::Text) {
        text.push_back(row);
      } else {
        std::vector<std::string> line{std::to_string(r)};
        line.insert(line.end(), row.begin(), row.end());
        line.resize(2 + kTableMaxN);
        os << csv_line(line);
      }
    }
    if (f == Format::Text) os << (r > r_lo ? "\n" : "") << "r = " << r << "\n" << text_table(text);
  }
  if (f == Format::Json) os << rows.dump(2) << "\n";
  return os.str();
}

std::string euler_number_table(Format f) {
  auto t = euler_numbers(kEulerRows, EulerMode::CTriangle);
  if (t != euler_numbers(kEulerRows, EulerMode::Series))
    throw ConsistencyError("Euler numbers disagree between the c triangle and the tan/sec series");
  std::ostringstream os;
  if (f == Format::Json) {
    Json rows = Json::array();
    for (int n = 1; n <= kEulerRows; ++n) rows.push_back(Json{{"n", n}, {"t", t[n].get_str()}});
    os << rows.dump(2) << "\n";
  } else if (f == Format::Csv) {
    os << "n,t_n\n";
    for (int n = 1; n <= kEulerRows; ++n) os << n << "," << t[n].get_str() << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"n", "t_n"}};
    for (int n = 1; n <= kEulerRows; ++n) rows.push_back({std::to_string(n), t[n].get_str()});
    os << text_table(rows);
  }
  return os.str();
}

size_t Report::failures() const {
  return static_cast<size_t>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.witness.ok; }));
}

namespace {

struct Case {
  std::string id;
  std::string params;
  std::function<Witness()> check;
};

std::string nr(int n, int r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }
std::string nn(int n) { return "n=" + std::to_string(n); }
std::string order_of(int N) { return "order=" + std::to_string(N); }

void chapter1(std::vector<Case>& cs, const Options& o) {
  const Budget b = o.budget;
  const int top = std::min(b.max_n, 8);
  for (const auto& [id, w] : running_example()) cs.push_back({"example." + id, "sigma=6 4 1 2 5 3", [w = w] { return w; }});
  for (int n = 1; n <= top; ++n) {
    cs.push_back({"bijection.fundamental", nn(n), [=] { return certify_fundamental(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.orbit-maxima", nn(n), [=] { return certify_orbit_maxima(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.local-minima", nn(n), [=] { return certify_local_minima(n, Execution::Parallel, b); }});
    if (n % 2 == 0)
      cs.push_back({"bijection.biexcedent-alternating", nn(n), [=] { return certify_biexcedent_alternating(n, b); }});
    cs.push_back({"bijection.bar", nn(n), [=] { return certify_bar(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.prime", nn(n), [=] { return certify_prime(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.double-prime", nn(n), [=] { return certify_double_prime(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.reverse", nn(n), [=] { return certify_reverse(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.check", nn(n), [=] { return certify_check(n, Execution::Parallel, b); }});
    cs.push_back({"bijection.rotation", nn(n), [=] { return certify_rotation(n, Execution::Parallel, b); }});
    cs.push_back({"vector.invariants", nn(n), [=] { return certify_vector_invariants(n, Execution::Parallel, b); }});
  }
  for (int n = 1; n <= std::min(b.max_n - 1, 7); ++n)
    for (int r = 0; r <= std::min(n, 3); ++r)
      for (int primes = 0; primes <= r; ++primes)
        cs.push_back({"vector.families", nn(n) + " deltas=" + std::to_string(r - primes) + " primes=" + std::to_string(primes),
                      [=] { return certify_vector_families(n, r - primes, primes, b); }});
}

void chapter2(std::vector<Case>& cs, const Options& o) {
  const Budget b = o.budget;
  const int top = std::min(b.max_n, 8);
  for (int n = 1; n <= top; ++n)
    for (int r = 1; r <= n; ++r)
      cs.push_back({"eulerian.methods", nr(n, r), [=]() -> Witness {
                      Poly1 reference = eulerian_recurrence_riordan(n, r);
                      const std::pair<const char*, Poly1> others[] = {
                          {"enumeration", eulerian_by_enumeration(n, r, {}, Execution::Parallel, b)},
                          {"shift recurrence", eulerian_recurrence_shift(n, r)},
                          {"explicit", eulerian_explicit_poly(n, r)},
                          {"series", eulerian_by_series(n, r)}};
                      for (const auto& [name, p] : others)
                        if (p != reference) return Witness{false, to_string(reference), to_string(p), std::string("coefficient recurrence against ") + name};
                      return Witness{true, to_string(reference), "4 other methods", "all methods agree"};
                    }});
  using B = Statistic::Base;
  for (int n = 1; n <= std::min(b.max_n - 1, 7); ++n)
    for (int r = 1; r <= std::min(n, 3); ++r)
      for (int primes = 0; primes <= r; ++primes)
        for (B base : {B::DPlusDPrime, B::M, B::D, B::DeltaECyclic, B::DeltaDFirstIsN}) {
          if (base == B::D && primes == r) continue;
          Statistic s{base, primes};
          cs.push_back({"eulerian.statistics", nr(n, r) + " " + to_string(s), [=] {
                          return compare(eulerian_by_enumeration(n, r, s, Execution::Parallel, b), eulerian(n, r), to_string(s));
                        }});
        }
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= p; ++q)
      cs.push_back({"stirling.modes", "p=" + std::to_string(p) + " q=" + std::to_string(q),
                    [=] { return compare(stirling2(p, q, StirlingMode::QuasiPermutation), stirling2(p, q)); }});
  for (int n = 1; n <= 8; ++n) cs.push_back({"frobenius", nn(n), [=] { return frobenius_identity(n); }});
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= std::min(n, 3); ++r)
      cs.push_back({"riordan-stirling", nr(n, r), [=] { return riordan_stirling_identity(n, r); }});
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      cs.push_back({"worpitzky", "m=" + std::to_string(m) + " " + nn(n), [=] { return worpitzky(m, n); }});
      if (std::min(m, n) <= 6)
        for (int r = 1; r <= std::min(m, n); ++r)
          cs.push_back({"worpitzky-generalized", "m=" + std::to_string(m) + " " + nr(n, r), [=] { return worpitzky_generalized(m, n, r); }});
    }
  for (int n = 2; n <= std::min(b.max_n, 7); ++n)
    for (int r = 2; r <= std::min(n, 3); ++r)
      cs.push_back({"newcomb", nr(n, r), [=] { return newcomb_specialization(n, r, b); }});
  for (int n = 1; n <= std::min(b.max_n, 6); ++n) {
    for (int r = 1; r <= 3; ++r) cs.push_back({"q.eulerian", nr(n, r), [=] { return q_eulerian_identity(n, r, b); }});
    cs.push_back({"q.saillant", nn(n), [=] { return q_saillant_identity(n, b); }});
  }
  for (int n = 1; n <= std::min(b.max_n, 7); ++n)
    for (int r = 0; r <= std::min(n, 3); ++r)
      cs.push_back({"injection", nr(n, r), [=] { return compare(injection_interpretation(n, r, b), eulerian_reduced(n, r)); }});
  for (int n = 1; n <= top; ++n) {
    cs.push_back({"roselle.vias", nn(n), [=] {
                    return compare(roselle_polynomial(n, RoselleVia::ExcedanceOnDerangements, Execution::Parallel, b),
                                   roselle_polynomial(n, RoselleVia::RisesOnSuccessionFree, Execution::Parallel, b),
                                   "derangements against succession-free");
                  }});
    cs.push_back({"roselle.inversion", nn(n), [=] {
                    return compare(roselle_from_eulerian(n), roselle_polynomial(n, RoselleVia::ExcedanceOnDerangements,
                                                                                Execution::Parallel, b));
                  }});
    cs.push_back({"abar.specializations", nn(n), [=] { return abar_specializations(n, b); }});
  }
}

void series_suite(std::vector<Case>& cs, const Options& o) {
  const Budget b = o.budget;
  const int N = o.order;
  const int E = std::min(N, b.max_n);
  const int perm_max = std::max(N, b.permanent_max);
  cs.push_back({"series.abar-exponential", order_of(E), [=] { return verify_abar_exponential(E, b); }});
  for (auto f : {ClosedForm::Abar, ClosedForm::ZeroShift, ClosedForm::Eulerian, ClosedForm::Roselle})
    cs.push_back({"series.closed-form." + to_string(f), order_of(N), [=] { return verify_closed_form(f, N, b); }});
  for (auto rel : {AbarRelation::Affine, AbarRelation::ExpC, AbarRelation::Exponential})
    cs.push_back({"series.relation." + to_string(rel), order_of(N), [=] { return verify_abar_relation(rel, N); }});
  for (int r = 1; r <= 5; ++r)
    cs.push_back({"series.power", order_of(N) + " r=" + std::to_string(r), [=] { return verify_power_identity(r, N); }});
  cs.push_back({"series.bernoulli", order_of(N), [=] { return verify_bernoulli(N); }});
  std::vector<Rational> x;
  for (int k = 1; k <= E; ++k) x.emplace_back(Rational(k * k + 1, k + 1));
  for (const Weight& w : {Weight::cycle_indicator(x), Weight::theta_prime(), Weight::biexcedence(),
                          Weight::banded(Rational(2), Rational(3), Rational(5))})
    cs.push_back({"series.exponential-formula", order_of(E) + " " + to_string(w), [=] { return verify_exponential_formula(w, E, b); }});
  for (int r = 2; r <= 3; ++r) {
    const int M = std::min(E, 8);
    cs.push_back({"series.cycle-power-weight", order_of(M) + " r=" + std::to_string(r), [=] { return verify_cycle_power_weight(r, M, b); }});
  }
  cs.push_back({"series.arborescence", order_of(N), [=] { return verify_arborescence_equation(N, b); }});
  cs.push_back({"series.arborescence-counts", "n<=" + std::to_string(b.fn_scan_max), [=] { return verify_arborescence_counts(b); }});
  const Rational abc[][3] = {{2, 3, 5}, {2, 3, 2}, {Rational(1, 2), 3, -1}, {1, 0, 4}};
  for (const auto& m : abc) {
    Rational a = m[0], bb = m[1], c = m[2];
    cs.push_back({"series.permanent-determinant",
                  order_of(N) + " a=" + to_string(a) + " b=" + to_string(bb) + " c=" + to_string(c),
                  [=] { return verify_perdet_identity(a, bb, c, N, perm_max); }});
  }
  cs.push_back({"series.matrix.kittel", order_of(N), [=] { return verify_special_matrix(SpecialMatrix::Kittel, N, perm_max); }});
  cs.push_back({"series.matrix.zero-column", order_of(N),
                [=] { return verify_special_matrix(SpecialMatrix::ZeroFirstColumn, N, perm_max); }});
  for (int n = 1; n <= std::min({E, 8, b.permanent_max}); ++n)
    cs.push_back({"series.banded-permanent", nn(n), [=] { return verify_banded_permanent_abar(n, b); }});
  cs.push_back({"series.tan-sec", order_of(N), [=] { return verify_tan_sec(N); }});
}

void chapter5(std::vector<Case>& cs, const Options& o) {
  const Budget b = o.budget;
  const int top = std::min(b.max_n, 8);
  for (int n = 3; n <= top; ++n) {
    cs.push_back({"words.nabla", nn(n), [=] { return verify_nabla_generates(n, b); }});
    cs.push_back({"words.nabla-commutes", nn(n), [=] { return verify_nabla_commutes(n, b); }});
  }
  for (int n = 2; n <= top; ++n) cs.push_back({"words.descent-letters", nn(n), [=] { return verify_descent_letters(n, b); }});
  if (top >= 2)
    cs.push_back({"c-triangle.modes", nn(top), [=] {
                    auto rec = c_triangle(top), abel = c_triangle(top, CTriangleMode::Abelianization, b);
                    for (int m = 2; m <= top; ++m)
                      for (int k = 0; k <= m; ++k)
                        if (rec[m][k] != abel[m][k])
                          return Witness{false, to_string(rec[m][k]), to_string(abel[m][k]),
                                         "c(" + std::to_string(m) + "," + std::to_string(k) + ")"};
                    return Witness{true, "recurrence", "abelianization", "all entries agree"};
                  }});
  for (int n = 2; n <= 9; ++n) cs.push_back({"c-triangle.eulerian", nn(n), [=] { return verify_c_triangle_identity(n); }});
  cs.push_back({"euler.modes", "n<=14", [=]() -> Witness {
                  auto tri = euler_numbers(kEulerRows, EulerMode::CTriangle), ser = euler_numbers(kEulerRows, EulerMode::Series);
                  auto show = [](const std::vector<Integer>& t) {
                    std::string s;
                    for (size_t i = 1; i < t.size(); ++i) s += (i > 1 ? "," : "") + t[i].get_str();
                    return s;
                  };
                  if (tri != ser) return Witness{false, show(tri), show(ser), "c triangle against tan/sec series"};
                  const int M = std::min(b.max_n, 10);
                  auto en = euler_numbers(M, EulerMode::Enumeration, b);
                  if (!std::equal(en.begin(), en.end(), tri.begin()))
                    return Witness{false, show(en), show(tri), "enumeration against c triangle"};
                  return Witness{true, show(tri), show(ser), "enumeration agrees to n=" + std::to_string(M)};
                }});
  for (int p = 1; 2 * p <= kEulerRows; ++p)
    cs.push_back({"alternating.eulerian", "p=" + std::to_string(p), [=] { return verify_eulerian_alternating(p, b); }});
  for (int p = 1; 2 * p <= std::min(b.max_n, 10); ++p) {
    cs.push_back({"alternating.words", "p=" + std::to_string(p), [=] { return verify_alternating_words(p, b); }});
    cs.push_back({"alternating.roselle", "p=" + std::to_string(p), [=] { return verify_roselle_alternating(p, b); }});
  }
  for (int n = 2; n <= top; ++n) {
    cs.push_back({"bridge.letters", nn(n), [=] { return verify_descent_bridge_letters(n, b); }});
    cs.push_back({"bridge.valleys", nn(n), [=] { return verify_descent_bridge_valleys(n, b); }});
  }
}

const std::vector<std::pair<std::string, void (*)(std::vector<Case>&, const Options&)>>& suites() {
  static const std::vector<std::pair<std::string, void (*)(std::vector<Case>&, const Options&)>> all{
      {"chapter1", chapter1}, {"chapter2", chapter2}, {"series", series_suite}, {"chapter5", chapter5}};
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, build] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

Report run_suite(const std::string& suite, const Options& opts) {
  std::vector<Case> cases;
  bool known = false;
  for (const auto& [name, build] : suites())
    if (suite == name || suite == "all") {
      build(cases, opts);
      known = true;
    }
  if (!known) throw DomainError("unknown suite '" + suite + "'");
  Report report{suite, {}, 0};
  auto start = std::chrono::steady_clock::now();
  for (auto& c : cases) {
    Witness w;
    try {
      w = c.check();
    } catch (const std::exception& e) {
      w = Witness{false, "", "", std::string("error: ") + e.what()};
    }
    report.entries.push_back({c.id, c.params, std::move(w)});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return report;
}

std::string render(const Report& r, Format f, bool verbose) {
  std::ostringstream os;
  const size_t failed = r.failures(), passed = r.entries.size() - failed;
  if (f == Format::Json) {
    Json j;
    j["suite"] = r.suite;
    j["passed"] = passed;
    j["failed"] = failed;
    j["elapsed_seconds"] = r.seconds;
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
      Json x{{"id", e.id}, {"params", e.params}, {"status", e.witness.ok ? "pass" : "fail"}};
      if (!e.witness.ok || verbose) {
        x["lhs"] = e.witness.lhs;
        x["rhs"] = e.witness.rhs;
        x["detail"] = e.witness.detail;
      }
      j["entries"].push_back(x);
    }
    os << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    os << "id,params,status,lhs,rhs,detail\n";
    for (const auto& e : r.entries) {
      bool full = !e.witness.ok || verbose;
      os << csv_line({e.id, e.params, e.witness.ok ? "pass" : "fail", full ? e.witness.lhs : "", full ? e.witness.rhs : "",
                      full ? e.witness.detail : ""});
    }
  } else {
    for (const auto& e : r.entries) {
      os << (e.witness.ok ? "PASS  " : "FAIL  ") << e.id << "  " << e.params << "\n";
      if (!e.witness.ok || verbose) {
        if (!e.witness.detail.empty()) os << "      " << e.witness.detail << "\n";
        os << "      lhs: " << e.witness.lhs << "\n      rhs: " << e.witness.rhs << "\n";
      }
    }
    os << r.suite << ": " << passed << " passed, " << failed << " failed in " << std::fixed << std::setprecision(2)
       << r.seconds << " s\n";
  }
  return os.str();
}

namespace {

// Δ, Δ', Δ'' as d, d', d'' with an optional power, then E, D, M, D' or E'.
StatVector stat_vector(const Permutation& p, std::string expr) {
  const std::string original = expr;
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (size_t at; (at = expr.find(from)) != std::string::npos;) expr.replace(at, from.size(), to);
  };
  replace_all("Δ", "d");
  replace_all("″", "''");
  replace_all("′", "'");
  replace_all("²", "2");
  replace_all("³", "3");
  int deltas = 0, primes = 0, seconds = 0;
  size_t i = 0;
  while (i < expr.size() && expr[i] == 'd') {
    ++i;
    int* target = &deltas;
    if (expr.compare(i, 2, "''") == 0) {
      target = &seconds;
      i += 2;
    } else if (i < expr.size() && expr[i] == '\'') {
      target = &primes;
      ++i;
    }
    int power = 0;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) power = power * 10 + (expr[i++] - '0');
    *target += power ? power : 1;
  }
  const std::string base = expr.substr(i);
  StatVector v;
  if (base == "E") v = excedance_vector(p);
  else if (base == "D") v = descent_vector(p);
  else if (base == "M") v = rise_vector(p);
  else if (base == "D'") v = dprime_vector(p);
  else if (base == "E'") v = fixed_point_vector(p);
  else throw DomainError("unknown statistic '" + original + "'");
  if (deltas + primes + seconds > p.size()) throw DomainError("operator degree exceeds n in '" + original + "'");
  v = apply_monomial(std::move(v), deltas, primes);
  for (int k = 0; k < seconds; ++k) v = delta_second(v);
  return v;
}

std::string permutation_list(const Permutation& p) { return to_string(p); }

Json word_json(const Permutation& p) { return Json(p.word()); }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

void print_poly1(std::ostream& out, Format f, int n, std::optional<int> r, const Poly1& p) {
  if (f == Format::Json) {
    out << poly_json(n, r, p).dump() << "\n";
  } else if (f == Format::Csv) {
    out << "k,coeff\n";
    auto cs = integer_coeffs(p);
    for (size_t k = 0; k < cs.size(); ++k) out << k << "," << cs[k].get_str() << "\n";
  } else {
    out << to_string(p) << "\n";
  }
}

void print_poly2(std::ostream& out, Format f, int n, const Poly2& p, const std::vector<std::string>& vars) {
  if (f == Format::Json) {
    Json j;
    j["n"] = n;
    j["coeffs"] = Json::array();
    for (const auto& c : p.coeffs()) j["coeffs"].push_back(decimal(integer_coeffs(c)));
    out << j.dump() << "\n";
  } else if (f == Format::Csv) {
    out << vars[0] << "_power,t_power,coeff\n";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
      auto cs = integer_coeffs(p.coeffs()[i]);
      for (size_t k = 0; k < cs.size(); ++k)
        if (cs[k] != 0) out << i << "," << k << "," << cs[k].get_str() << "\n";
    }
  } else {
    out << to_string(p, vars) << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian polynomials, permutation statistics and their identities", "eulerian"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--max-n", opts.budget.max_n, "Largest n enumerated exhaustively")->check(CLI::Range(1, 12));
  app.add_option("--order", opts.order, "Series truncation order")->check(CLI::Range(1, 30));
  app.add_option("--fn-scan-max", opts.budget.fn_scan_max, "Largest n for scans of all maps [n] -> [n]")->check(CLI::Range(0, 8));
  app.add_flag("--verbose", opts.verbose, "Show intermediates and passing witnesses");

  auto* tables = app.add_subcommand("tables", "Print the Eulerian or Euler number tables");
  std::string table_name;
  std::optional<int> table_r;
  tables->add_option("which", table_name, "eulerian or euler-numbers")->required()->check(CLI::IsMember({"eulerian", "euler-numbers"}));
  tables->add_option("--r", table_r, "Only this shift (eulerian table)");

  auto* stat = app.add_subcommand("stat", "Statistic vectors and scalars of a permutation");
  std::string stat_word;
  std::vector<std::string> stat_names;
  stat->add_option("perm", stat_word, "One-line word, e.g. \"6 4 1 2 5 3\"")->required();
  stat->add_option("stats", stat_names, "E, D, M, D', E', dE, d'E, d''E, d2E, ..., z, s, eps");

  auto* map = app.add_subcommand("map", "Apply a bijection");
  std::string map_word, map_name;
  long map_r = 1;
  map->add_option("perm", map_word, "One-line word")->required();
  map->add_option("name", map_name, "Map name")
      ->required()
      ->check(CLI::IsMember({"fundamental", "fundamental-inverse", "tilde", "bar", "prime", "double-prime", "check", "zeta", "inverse"}));
  map->add_option("--r", map_r, "Power of the rotation for zeta");

  auto* poly = app.add_subcommand("poly", "Compute a polynomial");
  std::string family, method = "riordan", via = "derangements";
  int poly_n = 0, poly_r = 1;
  poly->add_option("family", family, "Polynomial family")
      ->required()
      ->check(CLI::IsMember({"eulerian", "reduced", "roselle", "abar", "q", "injection"}));
  poly->add_option("--n", poly_n, "Size")->required()->check(CLI::Range(0, 40));
  poly->add_option("--r", poly_r, "Shift")->check(CLI::Range(0, 40));
  poly->add_option("--method", method, "Eulerian method")
      ->check(CLI::IsMember({"riordan", "shift", "explicit", "enumeration", "series"}));
  poly->add_option("--via", via, "Roselle route")->check(CLI::IsMember({"derangements", "succession-free", "inversion"}));

  auto* series = app.add_subcommand("series", "Closed-form series, n! times each coefficient");
  std::string series_name;
  series->add_option("name", series_name, "Series")
      ->required()
      ->check(CLI::IsMember({"abar", "zero-shift", "eulerian", "roselle", "tan", "sec"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "Suite")->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  opts.format = parse_format(format);
  const Format f = opts.format;

  try {
    if (*tables) {
      if (table_name == "eulerian")
        out << eulerian_table(f, table_r);
      else
        out << euler_number_table(f);
      return 0;
    }
    if (*stat) {
      Permutation p = Permutation::parse(stat_word);
      if (stat_names.empty()) stat_names = {"E", "D", "M", "D'", "E'", "dE", "dD", "z", "s", "eps"};
      Json j;
      if (f == Format::Csv) out << "stat,value\n";
      for (const auto& name : stat_names) {
        std::string value;
        Json jv;
        if (name == "z" || name == "s" || name == "eps" || name == "ε") {
          int x = name == "z" ? cycle_count(p) : name == "s" ? saillant_count(p) : signature(p);
          value = std::to_string(x);
          jv = x;
        } else {
          StatVector v = stat_vector(p, name);
          value = to_string(v);
          jv = v.entries();
        }
        if (f == Format::Json)
          j[name] = jv;
        else if (f == Format::Csv)
          out << csv_line({name, value});
        else
          out << name << " = " << value << "\n";
      }
      if (f == Format::Json) out << j.dump() << "\n";
      return 0;
    }
    if (*map) {
      Permutation p = Permutation::parse(map_word);
      std::vector<std::pair<std::string, std::string>> steps;
      Permutation image = p;
      if (map_name == "fundamental") image = fundamental(p);
      else if (map_name == "fundamental-inverse") image = fundamental_inverse(p);
      else if (map_name == "tilde") image = reverse_tilde(p);
      else if (map_name == "check") image = check_map(p);
      else if (map_name == "zeta") image = zeta_compose(p, map_r);
      else if (map_name == "inverse") image = p.inverse();
      else if (map_name == "bar") {
        BarTrace t = bar_map_trace(p);
        steps = {{"sigma1", to_string(t.sigma1)}, {"sigma2", to_string(t.sigma2)}};
        image = t.result;
      } else if (map_name == "prime") {
        PrimeTrace t = prime_map_trace(p);
        steps = {{"hat", to_string(t.hat)}, {"i", std::to_string(t.i)}};
        image = t.result;
      } else {
        DoublePrimeTrace t = double_prime_map_trace(p);
        steps = {{"sigma1", to_string(t.sigma1)}, {"sigma2", to_string(t.sigma2)}};
        image = t.result;
      }
      if (f == Format::Json) {
        Json j{{"input", word_json(p)}, {"map", map_name}, {"output", word_json(image)}};
        if (opts.verbose)
          for (const auto& [k, v] : steps) j["intermediates"][k] = v;
        out << j.dump() << "\n";
      } else if (f == Format::Csv) {
        out << "step,word\n";
        if (opts.verbose)
          for (const auto& [k, v] : steps) out << csv_line({k, v});
        out << csv_line({"result", permutation_list(image)});
      } else {
        if (opts.verbose)
          for (const auto& [k, v] : steps) out << k << " = " << v << "\n";
        out << permutation_list(image) << "\n";
      }
      return 0;
    }
    if (*poly) {
      if (family == "eulerian" || family == "reduced") {
        Poly1 p;
        if (method == "riordan") p = eulerian(poly_n, poly_r);
        else if (method == "shift") p = eulerian_recurrence_shift(poly_n, poly_r);
        else if (method == "explicit") p = eulerian_explicit_poly(poly_n, poly_r);
        else if (method == "enumeration") p = eulerian_by_enumeration(poly_n, poly_r, {}, Execution::Parallel, opts.budget);
        else p = eulerian_by_series(poly_n, poly_r);
        if (family == "reduced") p = p.scaled_by(Rational(1) / Rational(factorial(poly_r)));
        print_poly1(out, f, poly_n, poly_r, p);
      } else if (family == "injection") {
        print_poly1(out, f, poly_n, poly_r, injection_interpretation(poly_n, poly_r, opts.budget));
      } else if (family == "roselle") {
        Poly1 p = via == "inversion" ? roselle_from_eulerian(poly_n)
                                     : roselle_polynomial(poly_n,
                                                          via == "derangements" ? RoselleVia::ExcedanceOnDerangements
                                                                                : RoselleVia::RisesOnSuccessionFree,
                                                          Execution::Parallel, opts.budget);
        print_poly1(out, f, poly_n, std::nullopt, p);
      } else if (family == "abar") {
        print_poly2(out, f, poly_n, abar_polynomial(poly_n, Execution::Parallel, opts.budget), {"t'", "t"});
      } else {
        print_poly2(out, f, poly_n, q_polynomial(poly_n, Execution::Parallel, opts.budget), {"r", "t"});
      }
      return 0;
    }
    if (*series) {
      const int N = opts.order;
      Json rows = Json::array();
      std::vector<std::vector<std::string>> text;
      if (f == Format::Csv) out << "n,coefficient\n";
      auto emit = [&](int n, const std::string& rendered, Json j) {
        if (f == Format::Json) {
          rows.push_back(Json{{"n", n}, {"coeffs", std::move(j)}});
        } else if (f == Format::Csv) {
          out << csv_line({std::to_string(n), rendered});
        } else {
          out << n << ": " << rendered << "\n";
        }
      };
      if (series_name == "tan" || series_name == "sec") {
        TanSec ts = tan_sec_series(N);
        const SeriesQ& s = series_name == "tan" ? ts.tan : ts.sec;
        for (int n = 0; n <= N; ++n) {
          Rational v = s[n] * Rational(factorial(n));
          emit(n, to_string(v), Json::array({to_string(v)}));
        }
      } else if (series_name == "abar") {
        SeriesTT s = closed_form_abar(N);
        for (int n = 0; n <= N; ++n) {
          Poly2 c = s[n].scaled_by(Rational(factorial(n)));
          Json j = Json::array();
          for (const auto& inner : c.coeffs()) j.push_back(decimal(integer_coeffs(inner)));
          emit(n, to_string(c), std::move(j));
        }
      } else {
        SeriesT s = series_name == "zero-shift" ? closed_form_zero_shift(N)
                    : series_name == "eulerian" ? closed_form_eulerian(N)
                                                : closed_form_roselle(N);
        for (int n = 0; n <= N; ++n) {
          Poly1 c = s[n].scaled_by(Rational(factorial(n)));
          emit(n, to_string(c), decimal(integer_coeffs(c)));
        }
      }
      if (f == Format::Json) out << rows.dump(2) << "\n";
      return 0;
    }
    Report report = run_suite(suite, opts);
    out << render(report, f, opts.verbose);
    return report.failures() ? 1 : 0;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eulerian::cli
