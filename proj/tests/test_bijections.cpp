#include <doctest.h>

#include <set>

#include "eulerian/bijections.hpp"
#include "eulerian/certify.hpp"
#include "oracles.hpp"

using namespace eulerian;

namespace {

const Permutation sigma{6, 4, 1, 2, 5, 3};

template <class Map>
std::set<std::vector<int>> image_of(int n, bool (*keep)(const oracle::Word&), Map map, size_t* visited) {
  std::set<std::vector<int>> out;
  *visited = 0;
  oracle::for_each_word(n, [&](const oracle::Word& w) {
    if (!keep(w)) return;
    ++*visited;
    out.insert(map(Permutation(w)).word());
  });
  return out;
}

bool last_is_one(const oracle::Word& w) { return w.back() == 1; }
bool first_is_max(const oracle::Word& w) { return w.front() == static_cast<int>(w.size()); }

}  // namespace

TEST_CASE("worked example images") {
  CHECK(reverse_tilde(sigma) == Permutation{3, 5, 2, 1, 4, 6});
  CHECK(rise_vector(reverse_tilde(sigma)) == StatVector{3, 3, 0, 2, 2, 0});
  CHECK(fundamental(sigma) == Permutation{4, 2, 5, 6, 1, 3});
  BarTrace bar = bar_map_trace(sigma);
  CHECK(bar.sigma1 == Permutation{4, 1, 2, 5, 3, 6});
  CHECK(bar.sigma2 == Permutation{5, 4, 1, 2, 3, 6});
  CHECK(bar.result == Permutation{6, 3, 2, 1, 4, 5});
}

TEST_CASE("biexcedent permutations of [4] and their images") {
  const std::pair<Permutation, Permutation> rows[] = {
      {{2, 1, 4, 3}, {2, 1, 4, 3}}, {{3, 4, 1, 2}, {3, 1, 4, 2}}, {{4, 3, 2, 1}, {3, 2, 4, 1}},
      {{4, 3, 1, 2}, {4, 1, 3, 2}}, {{3, 4, 2, 1}, {4, 2, 3, 1}}};
  std::set<Permutation> listed;
  for (const auto& [b, t] : rows) {
    CHECK(is_in_class(b, ClassTag::Kind::Biexcedent));
    CHECK(fundamental(b) == t);
    listed.insert(b);
  }
  CHECK(listed.size() == static_cast<size_t>(count_class(4, ClassTag::Kind::Biexcedent)));
}

TEST_CASE("fundamental transformation against the cycle-reading oracle") {
  for (int n = 1; n <= 7; ++n)
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      Permutation p(w);
      Permutation hat = fundamental(p);
      REQUIRE(hat.word() == oracle::fundamental(w));
      REQUIRE(fundamental_inverse(hat) == p);
    });
}

TEST_CASE("bar sends derangements onto succession-free permutations") {
  for (int n = 1; n <= 7; ++n) {
    size_t visited = 0;
    auto img = image_of(n, oracle::derangement, bar_map, &visited);
    CHECK(img.size() == visited);
    for (const auto& w : img) CHECK(oracle::succession_free(w));
    long long target = 0;
    oracle::for_each_word(n, [&](const oracle::Word& w) { target += oracle::succession_free(w); });
    CHECK(static_cast<long long>(img.size()) == target);
  }
}

TEST_CASE("prime map: last-is-1 onto first-is-n") {
  for (int n = 2; n <= 7; ++n) {
    size_t visited = 0;
    auto img = image_of(n, last_is_one, prime_map, &visited);
    CHECK(img.size() == visited);
    CHECK(Integer(static_cast<long>(img.size())) == oracle::fact(n - 1));
    for (const auto& w : img) CHECK(first_is_max(w));
  }
  CHECK_THROWS_AS(prime_map(sigma), DomainError);
}

TEST_CASE("double prime map: S_{n-1} onto cyclic permutations of [n]") {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<int>> img;
    oracle::for_each_word(n - 1, [&](const oracle::Word& w) {
      Permutation c = double_prime_map(Permutation(w));
      REQUIRE(c.size() == n);
      CHECK(oracle::cyclic(c.word()));
      img.insert(c.word());
    });
    CHECK(Integer(static_cast<long>(img.size())) == oracle::fact(n - 1));
  }
}

TEST_CASE("check is an involution and zeta has order n") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_word(n, [&](const oracle::Word& w) {
      Permutation p(w);
      REQUIRE(check_map(check_map(p)) == p);
      REQUIRE(zeta_compose(p, n) == p);
      REQUIRE(zeta_compose(zeta_compose(p, 3), -3) == p);
      REQUIRE(reverse_tilde(reverse_tilde(p)) == p);
    });
}

TEST_CASE("exhaustive certificates hold through n = 7") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(certify_fundamental(n));
    CHECK(certify_orbit_maxima(n));
    CHECK(certify_local_minima(n));
    CHECK(certify_bar(n));
    CHECK(certify_prime(n));
    CHECK(certify_double_prime(n));
    CHECK(certify_reverse(n));
    CHECK(certify_check(n));
    CHECK(certify_rotation(n));
    CHECK(certify_vector_invariants(n));
    if (n % 2 == 0) CHECK(certify_biexcedent_alternating(n));
  }
}

TEST_CASE("every printed value of the worked example is reproduced") {
  for (const auto& [id, w] : running_example()) {
    CAPTURE(id);
    CAPTURE(w.lhs);
    CAPTURE(w.rhs);
    CHECK(w.ok);
  }
}
