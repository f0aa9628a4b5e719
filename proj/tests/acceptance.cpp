// One line per acceptance criterion; exit status 1 if any is red.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eulerian/alternating.hpp"
#include "eulerian/certify.hpp"
#include "eulerian/cli.hpp"
#include "eulerian/series.hpp"

using namespace eulerian;

namespace {

// Reduced tables as printed, r = 1..5, rows n = r+1..8; the n = r row is 1.
const std::vector<std::vector<std::vector<long>>> kPrinted = {
    {{1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 66, 26, 1}, {1, 57, 302, 302, 57, 1},
     {1, 120, 1191, 2416, 1191, 120, 1}, {1, 247, 4293, 15619, 15619, 4293, 247, 1}},
    {{2, 1}, {4, 7, 1}, {8, 33, 18, 1}, {16, 131, 171, 41, 1}, {32, 473, 1208, 718, 88, 1},
     {64, 1611, 7197, 8422, 2682, 183, 1}},
    {{3, 1}, {9, 10, 1}, {27, 67, 25, 1}, {81, 376, 326, 56, 1}, {243, 1909, 3134, 1314, 119, 1}},
    {{4, 1}, {16, 13, 1}, {64, 113, 32, 1}, {256, 821, 531, 71, 1}},
    {{5, 1}, {25, 16, 1}, {125, 171, 39, 1}},
};

const long kEuler[] = {1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765, 22368256, 199360981};

struct Outcome {
  bool ok = true;
  std::string note;
  void require(const Witness& w, const std::string& where) {
    if (ok && !w.ok) {
      ok = false;
      note = where + ": " + w.detail + " [" + w.lhs + " vs " + w.rhs + "]";
    }
  }
  void require(bool cond, const std::string& where) { require(Witness{cond, "", "", "mismatch"}, where); }
};

std::string at(int n, int r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

Poly1 printed_reduced(int n, int r) {
  if (n == r) return Poly1(1);
  std::vector<Rational> c;
  for (long v : kPrinted[static_cast<size_t>(r) - 1][static_cast<size_t>(n - r) - 1]) c.emplace_back(v);
  return Poly1(std::move(c));
}

Outcome tables() {
  Outcome o;
  for (int r = 1; r <= 5; ++r)
    for (int n = r; n <= 8; ++n) {
      const Poly1 want = printed_reduced(n, r);
      const Rational scale = Rational(1) / Rational(factorial(r));
      o.require(compare(eulerian_reduced(n, r), want), "reduced " + at(n, r));
      o.require(compare(eulerian_by_enumeration(n, r).scaled_by(scale), want), "enumeration " + at(n, r));
      o.require(compare(eulerian_recurrence_shift(n, r).scaled_by(scale), want), "shift recurrence " + at(n, r));
      o.require(compare(eulerian_recurrence_riordan(n, r).scaled_by(scale), want), "riordan recurrence " + at(n, r));
      o.require(compare(eulerian_explicit_poly(n, r).scaled_by(scale), want), "explicit " + at(n, r));
      o.require(compare(eulerian_by_series(n, r).scaled_by(scale), want), "series " + at(n, r));
      o.require(compare(injection_interpretation(n, r), want), "injection " + at(n, r));
    }
  return o;
}

Outcome euler() {
  Outcome o;
  std::vector<Integer> want{Integer(1)};
  for (long t : kEuler) want.emplace_back(t);
  o.require(euler_numbers(14, EulerMode::CTriangle) == want, "c triangle");
  o.require(euler_numbers(14, EulerMode::Series) == want, "tan/sec series");
  auto en = euler_numbers(10, EulerMode::Enumeration);
  o.require(std::equal(en.begin(), en.end(), want.begin()) && en.size() == 11, "enumeration to n=10");
  return o;
}

Outcome bijections() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const std::string N = "n=" + std::to_string(n);
    o.require(certify_fundamental(n), "fundamental " + N);
    o.require(certify_orbit_maxima(n), "orbit maxima " + N);
    o.require(certify_local_minima(n), "local minima " + N);
    o.require(certify_bar(n), "bar " + N);
    o.require(certify_prime(n), "prime " + N);
    o.require(certify_double_prime(n), "double prime " + N);
    o.require(certify_reverse(n), "reverse " + N);
    o.require(certify_check(n), "check " + N);
    o.require(certify_rotation(n), "rotation " + N);
    o.require(certify_vector_invariants(n), "vector invariants " + N);
    if (n % 2 == 0) o.require(certify_biexcedent_alternating(n), "biexcedent/alternating " + N);
  }
  return o;
}

Outcome example() {
  Outcome o;
  for (const auto& [id, w] : running_example()) o.require(w, id);
  return o;
}

Outcome series() {
  Outcome o;
  cli::Options opts;
  opts.order = 10;
  cli::Report r = cli::run_suite("series", opts);
  for (const auto& e : r.entries) o.require(e.witness, e.id + " " + e.params);
  return o;
}

Outcome finite() {
  Outcome o;
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      o.require(worpitzky(m, n), "worpitzky m=" + std::to_string(m) + " n=" + std::to_string(n));
      if (std::min(m, n) <= 6)
        for (int r = 1; r <= std::min(m, n); ++r) o.require(worpitzky_generalized(m, n, r), "generalized worpitzky m=" + std::to_string(m) + " " + at(n, r));
    }
  for (int n = 1; n <= 8; ++n) o.require(frobenius_identity(n), "frobenius n=" + std::to_string(n));
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= std::min(n, 3); ++r) o.require(riordan_stirling_identity(n, r), "riordan-stirling " + at(n, r));
    for (int r = 2; r <= std::min(n, 3); ++r) o.require(newcomb_specialization(n, r), "newcomb " + at(n, r));
    for (int r = 0; r <= std::min(n, 3); ++r)
      o.require(compare(injection_interpretation(n, r), eulerian_reduced(n, r)), "injection " + at(n, r));
  }
  for (int n = 1; n <= 6; ++n) {
    o.require(q_saillant_identity(n), "q saillant n=" + std::to_string(n));
    for (int r = 1; r <= 3; ++r) o.require(q_eulerian_identity(n, r), "q eulerian " + at(n, r));
  }
  return o;
}

Outcome words() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    o.require(verify_nabla_generates(n), "nabla n=" + std::to_string(n));
    o.require(verify_nabla_commutes(n), "nabla/abelianization n=" + std::to_string(n));
  }
  auto rec = c_triangle(8), abel = c_triangle(8, CTriangleMode::Abelianization);
  o.require(rec == abel, "c triangle modes n<=8");
  for (int n = 2; n <= 9; ++n) o.require(verify_c_triangle_identity(n), "c identity n=" + std::to_string(n));
  for (int p = 1; 2 * p <= 14; ++p) o.require(verify_eulerian_alternating(p), "eulerian at -1 p=" + std::to_string(p));
  for (int p = 1; 2 * p <= 10; ++p) {
    o.require(verify_alternating_words(p), "alternating words p=" + std::to_string(p));
    o.require(verify_roselle_alternating(p), "roselle at -1 p=" + std::to_string(p));
  }
  return o;
}

Outcome five_methods() {
  Outcome o;
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r) {
      Poly1 ref = eulerian_by_enumeration(n, r);
      o.require(compare(eulerian_recurrence_shift(n, r), ref), "shift " + at(n, r));
      o.require(compare(eulerian_recurrence_riordan(n, r), ref), "riordan " + at(n, r));
      o.require(compare(eulerian_explicit_poly(n, r), ref), "explicit " + at(n, r));
      o.require(compare(eulerian_by_series(n, r), ref), "series " + at(n, r));
    }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"shifted Eulerian tables r=1..5, n<=8, all methods", tables},
      {"Euler numbers t_1..t_14, enumeration to n=10", euler},
      {"bijection certificates, n<=8", bijections},
      {"worked example 6 4 1 2 5 3", example},
      {"series identities to order 10", series},
      {"finite identities", finite},
      {"word calculus and alternating sums", words},
      {"five methods agree, 1<=r<=n<=8", five_methods},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", index, o.ok ? "PASS" : "FAIL", name, secs, o.ok ? "" : "\n    ",
                o.note.c_str());
  }
  return failed ? 1 : 0;
}
