#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "eulerian/permutation.hpp"
#include "eulerian/poly.hpp"

namespace eulerian {

// Serial is the reference path; Parallel splits the class by two-letter prefix
// and merges the per-prefix partial results in prefix order, so both paths
// return identical values for any associative merge.
enum class Execution { Serial, Parallel };

template <class Acc, class Visit, class Merge>
Acc reduce_class(int n, const ClassTag& c, Acc init, Visit visit, Merge merge,
                 Execution ex = Execution::Parallel, const Budget& budget = {}) {
  if (ex == Execution::Serial || n < 3) {
    Acc acc = init;
    for_each_in_class(n, c, [&](const Permutation& p) { visit(acc, p); }, budget);
    return acc;
  }
  require_within(n, budget.max_n, "enumeration");
  if (c.kind() == ClassTag::Kind::RTailOrdered && (c.r() < 1 || c.r() > n))
    throw DomainError("tail-ordered class needs 1 <= r <= n");
  std::vector<std::pair<int, int>> prefixes;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) prefixes.emplace_back(a, b);
  std::vector<Acc> partial(prefixes.size(), init);
  const long tasks = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    std::vector<int> w{prefixes[t].first, prefixes[t].second};
    for (int v = 1; v <= n; ++v)
      if (v != prefixes[t].first && v != prefixes[t].second) w.push_back(v);
    Acc& acc = partial[t];
    do {
      auto p = Permutation::trusted(w);
      if (is_in_class(p, c)) visit(acc, p);
    } while (std::next_permutation(w.begin() + 2, w.end()));
  }
  Acc acc = init;
  for (auto& part : partial) acc = merge(std::move(acc), part);
  return acc;
}

// Counts of an integer statistic with values in [0, n].
template <class Stat>
std::vector<long long> histogram(int n, const ClassTag& c, Stat stat, Execution ex = Execution::Parallel,
                                 const Budget& budget = {}) {
  std::vector<long long> init(static_cast<size_t>(n) + 1, 0);
  auto visit = [&](std::vector<long long>& h, const Permutation& p) { ++h.at(static_cast<size_t>(stat(p))); };
  auto merge = [](std::vector<long long> a, const std::vector<long long>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  return reduce_class(n, c, std::move(init), visit, merge, ex, budget);
}

// Joint counts of a pair of statistics with values in [0, n]; result[i][j].
template <class Stat>
std::vector<std::vector<long long>> histogram2(int n, const ClassTag& c, Stat stat,
                                               Execution ex = Execution::Parallel, const Budget& budget = {}) {
  using Grid = std::vector<std::vector<long long>>;
  Grid init(static_cast<size_t>(n) + 1, std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  auto visit = [&](Grid& h, const Permutation& p) {
    auto [i, j] = stat(p);
    ++h.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
  };
  auto merge = [](Grid a, const Grid& b) {
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
    return a;
  };
  return reduce_class(n, c, std::move(init), visit, merge, ex, budget);
}

// Σ t^stat(σ) over the class.
template <class Stat>
Poly1 class_polynomial(int n, const ClassTag& c, Stat stat, Execution ex = Execution::Parallel,
                       const Budget& budget = {}) {
  return from_counts(histogram(n, c, stat, ex, budget));
}

// Σ x^first t^second over the class, outer variable x.
template <class Stat>
Poly2 class_polynomial2(int n, const ClassTag& c, Stat stat, Execution ex = Execution::Parallel,
                        const Budget& budget = {}) {
  auto grid = histogram2(n, c, stat, ex, budget);
  std::vector<Poly1> outer;
  for (const auto& row : grid) outer.push_back(from_counts(row));
  return Poly2(std::move(outer));
}

}  // namespace eulerian
