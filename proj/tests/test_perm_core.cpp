#include <doctest.h>

#include "eulerian/parallel.hpp"
#include "eulerian/permutation.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {
const Permutation sigma{6, 4, 1, 2, 5, 3};
}

TEST_CASE("parse accepts spaces and commas and rejects non-permutations") {
  CHECK(Permutation::parse("6 4 1 2 5 3") == sigma);
  CHECK(Permutation::parse("6,4,1,2,5,3") == sigma);
  CHECK(Permutation::parse("").size() == 0);
  CHECK_THROWS_AS(Permutation::parse("1 1"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("0 1"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("1 3"), DomainError);
  CHECK_THROWS_AS(Permutation::parse("1 x"), DomainError);
}

TEST_CASE("vectors of the worked example") {
  CHECK(excedance_vector(sigma) == StatVector{6, 3, 0, 0, 1, 0});
  CHECK(descent_vector(sigma) == StatVector{4, 0, 3, 3, 0, 0});
  CHECK(rise_vector(sigma) == StatVector{6, 1, 3, 0, 0, 0});
  StatVector e = excedance_vector(sigma);
  CHECK(delta(e) == StatVector{5, 2, 0, 0, 0});
  CHECK(delta_prime(e) == StatVector{3, 0, 0, 1, 0});
  CHECK(delta_second(e) == StatVector{6, 3, 0, 0, 1});
  CHECK(delta(delta(e)) == StatVector{4, 1, 0, 0});
  CHECK(apply_monomial(e, 1, 1) == StatVector{2, 0, 0, 0});
  CHECK(apply_monomial(e, 0, 2) == StatVector{0, 0, 1, 0});
  CHECK(delta(descent_vector(sigma)) == StatVector{3, 0, 2, 2, 0});
  CHECK(cycle_count(sigma) == 3);
}

TEST_CASE("operators commute and negative entries clamp") {
  StatVector v{5, 0, 3, 7, 1, 2};
  CHECK(delta(delta_prime(v)) == delta_prime(delta(v)));
  CHECK(StatVector{-2, 3} == StatVector{0, 3});
  CHECK(positive_count(v) == 5);
}

TEST_CASE("statistics match direct counts") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      Permutation p(w);
      REQUIRE(positive_count(delta(excedance_vector(p))) == oracle::shifted_excedances(w, 1));
      REQUIRE(positive_count(fixed_point_vector(p)) == oracle::fixed_points(w));
      REQUIRE(cycle_count(p) == static_cast<int>(oracle::cycles(w).size()));
      REQUIRE(signature(p) == ((cycle_count(p) + n) % 2 ? -1 : 1));
    });
}

TEST_CASE("class sizes against brute-force filters") {
  using K = ClassTag::Kind;
  auto count = [](int n, bool (*keep)(const oracle::Word&)) {
    long long c = 0;
    oracle::for_each_word(n, [&](const oracle::Word& w) { c += keep(w); });
    return c;
  };
  auto euler = oracle::euler_numbers(8);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(Integer(static_cast<long>(count_class(n, K::All))) == oracle::fact(n));
    CHECK(count_class(n, K::Derangement) == count(n, oracle::derangement));
    CHECK(count_class(n, K::SuccessionFree) == count(n, oracle::succession_free));
    CHECK(Integer(static_cast<long>(count_class(n, K::Circular))) == oracle::fact(n - 1));
    CHECK(Integer(static_cast<long>(count_class(n, K::Alternating))) == euler[static_cast<size_t>(n)]);
    CHECK(Integer(static_cast<long>(count_class(n, K::FirstIsN))) == oracle::fact(n - 1));
    CHECK(Integer(static_cast<long>(count_class(n, K::LastIs1))) == oracle::fact(n - 1));
  }
  // Every biexcedent permutation has only even cycles, so odd n has none.
  CHECK(count_class(5, K::Biexcedent) == 0);
  CHECK(count_class(4, K::Biexcedent) == 5);
}

TEST_CASE("budget guards refuse oversized enumerations") {
  Budget small;
  small.max_n = 5;
  CHECK_THROWS_AS(count_class(6, ClassTag::Kind::All, small), BudgetError);
  CHECK_NOTHROW(count_class(5, ClassTag::Kind::All, small));
  small.fn_scan_max = 3;
  CHECK_THROWS_AS(count_class_functions(4, FunctionKind::Arborescence, small), BudgetError);
}

TEST_CASE("canonical factorization splits the functional graph") {
  FunctionMap f({2, 1, 3, 3, 4});
  auto parts = canonical_factorization(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].subset == std::vector<int>{1, 2});
  CHECK(parts[0].map.image == std::vector<int>{2, 1});
  CHECK(parts[1].subset == std::vector<int>{3, 4, 5});
  CHECK(parts[1].map.image == std::vector<int>{1, 1, 2});
  CHECK(component_count(f) == 2);
}

TEST_CASE("serial and parallel reductions visit the same sequence") {
  auto visit = [](std::vector<std::vector<int>>& acc, const Permutation& p) { acc.push_back(p.word()); };
  auto concat = [](std::vector<std::vector<int>> a, const std::vector<std::vector<int>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (ClassTag c : {ClassTag(ClassTag::Kind::All), ClassTag(ClassTag::Kind::Derangement), ClassTag::tail_ordered(2)}) {
    auto serial = reduce_class(7, c, std::vector<std::vector<int>>{}, visit, concat, Execution::Serial);
    auto parallel = reduce_class(7, c, std::vector<std::vector<int>>{}, visit, concat, Execution::Parallel);
    CHECK(serial == parallel);
    CHECK(std::is_sorted(serial.begin(), serial.end()));
  }
}
