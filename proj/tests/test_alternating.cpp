#include <doctest.h>

#include <set>

#include "eulerian/alternating.hpp"
#include "oracles.hpp"

using namespace eulerian;

TEST_CASE("letters print and parse") {
  VWord w = parse_vword("dDmM");
  CHECK(w == VWord{Letter::Descent, Letter::MarkedDescent, Letter::Rise, Letter::MarkedRise});
  CHECK(to_string(w) == "dDmM");
  CHECK_THROWS_AS(parse_vword("dx"), DomainError);
}

TEST_CASE("nabla on a single word") {
  WordWeightedSet one{{parse_vword("DM"), Integer(1)}};
  WordWeightedSet expected{{parse_vword("dDM"), Integer(1)}, {parse_vword("DMm"), Integer(1)}};
  CHECK(nabla(one) == expected);
  CHECK(abelianize(expected) == nabla(abelianize(one)));
}

TEST_CASE("V words carry (n-1)! permutations and generate by nabla") {
  for (int n = 2; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& [w, c] : v_words(n)) total += c;
    CHECK(total == oracle::fact(n - 1));
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(verify_nabla_generates(n));
    CHECK(verify_nabla_commutes(n));
    CHECK(verify_descent_letters(n));
  }
}

TEST_CASE("c triangle against the gamma decomposition of the Eulerian polynomials") {
  const int N = 9;
  auto rec = c_triangle(N), abel = c_triangle(N, CTriangleMode::Abelianization);
  for (int m = 2; m <= N; ++m) {
    auto gamma = oracle::gamma_vector(m);
    for (int k = 0; k <= m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      Integer want = static_cast<size_t>(k) < gamma.size() ? gamma[static_cast<size_t>(k)] : Integer(0);
      CHECK(rec[m][k] == want);
      CHECK(abel[m][k] == want);
    }
    CHECK(verify_c_triangle_identity(m));
  }
  CHECK(rec[4][2] == 2);
}

TEST_CASE("Euler numbers by three routes") {
  auto t = oracle::euler_numbers(14);
  CHECK(euler_numbers(14, EulerMode::CTriangle) == t);
  CHECK(euler_numbers(14, EulerMode::Series) == t);
  auto enumerated = euler_numbers(9, EulerMode::Enumeration);
  CHECK(std::equal(enumerated.begin(), enumerated.end(), t.begin()));
  CHECK_THROWS_AS(euler_numbers(11, EulerMode::Enumeration), BudgetError);
}

TEST_CASE("alternating clauses") {
  for (int p = 1; p <= 4; ++p) {
    CHECK(verify_eulerian_alternating(p));
    CHECK(verify_alternating_words(p));
    CHECK(verify_roselle_alternating(p));
  }
}

TEST_CASE("descent bridge is a bijection onto first-is-n") {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<int>> img;
    oracle::for_each_word(n - 1, [&](const oracle::Word& w) {
      Permutation b = descent_bridge(Permutation(w));
      CHECK(b(1) == n);
      img.insert(b.word());
    });
    CHECK(Integer(static_cast<long>(img.size())) == oracle::fact(n - 1));
    CHECK(verify_descent_bridge_letters(n));
    CHECK(verify_descent_bridge_valleys(n));
  }
}

TEST_CASE("the bridge as literally printed is never a permutation") {
  // (n, n+1-σ(n-1), ..., n+1-σ(1)) hits n again where σ takes the value 1.
  for (int n = 2; n <= 6; ++n) {
    long long repeats = 0;
    oracle::for_each_word(n - 1, [&](const oracle::Word& w) {
      auto word = descent_bridge_printed(Permutation(w));
      repeats += std::count(word.begin(), word.end(), n) == 2;
    });
    CHECK(Integer(static_cast<long>(repeats)) == oracle::fact(n - 1));
  }
}
