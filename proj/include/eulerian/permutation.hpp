#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerian/arith.hpp"

namespace eulerian {

// A bijection of {1..n}, stored as its word (σ(1),…,σ(n)). n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless the word uses each of 1..n exactly once.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  // Skips validation; for generators that build bijections by construction.
  static Permutation trusted(std::vector<int> word) {
    Permutation p;
    p.w_ = std::move(word);
    return p;
  }
  static Permutation identity(int n);
  // Whitespace- or comma-separated values; errors name the offending position.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  // σ(k) for 1 <= k <= n, and 0 at k = 0 and k = n+1.
  int operator()(int k) const { return k >= 1 && k <= size() ? w_[k - 1] : 0; }
  const std::vector<int>& word() const { return w_; }

  Permutation inverse() const;
  // (σ∘τ)(k) = σ(τ(k)).
  Permutation compose(const Permutation& tau) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

std::string to_string(const Permutation& p);

// A finite sequence of nonnegative integers; negative inputs are clamped to 0.
class StatVector {
 public:
  StatVector() = default;
  explicit StatVector(std::vector<int> entries);
  StatVector(std::initializer_list<int> entries) : StatVector(std::vector<int>(entries)) {}

  size_t size() const { return x_.size(); }
  bool empty() const { return x_.empty(); }
  // 1-based entry.
  int at(int k) const { return x_.at(static_cast<size_t>(k) - 1); }
  const std::vector<int>& entries() const { return x_; }

  // Entrywise sum; lengths must match.
  friend StatVector operator+(const StatVector& a, const StatVector& b);
  friend bool operator==(const StatVector&, const StatVector&) = default;
  friend auto operator<=>(const StatVector&, const StatVector&) = default;

 private:
  std::vector<int> x_;
};

std::string to_string(const StatVector& v);

StatVector delta(const StatVector& v);         // ((x1-1)+, …, (x_{p-1}-1)+)
StatVector delta_prime(const StatVector& v);   // drops the first entry
StatVector delta_second(const StatVector& v);  // drops the last entry
StatVector lambda_op(const StatVector& v);     // entrywise (x-1)+
// Δ^deltas Δ'^primes v; the operators commute so order is irrelevant.
StatVector apply_monomial(StatVector v, int deltas, int primes);
int positive_count(const StatVector& v);

StatVector excedance_vector(const Permutation& p);   // E
StatVector descent_vector(const Permutation& p);     // D
StatVector rise_vector(const Permutation& p);        // M
StatVector dprime_vector(const Permutation& p);      // D', indexed by value
StatVector fixed_point_vector(const Permutation& p); // E'

// Positions (1-based) holding a left-to-right maximum.
std::vector<int> saillants(const Permutation& p);
int saillant_count(const Permutation& p);
// Cycles, each starting at its maximum, listed by increasing maximum.
std::vector<std::vector<int>> orbits(const Permutation& p);
int cycle_count(const Permutation& p);
int signature(const Permutation& p);  // (-1)^(z+n)

class ClassTag {
 public:
  enum class Kind {
    All,
    Circular,
    SuccessionFree,
    Derangement,
    Alternating,
    Biexcedent,
    FirstIsN,
    LastIs1,
    RTailOrdered
  };

  constexpr ClassTag(Kind k = Kind::All) : kind_(k) {}  // NOLINT: implicit by design
  static constexpr ClassTag tail_ordered(int r) {
    ClassTag t(Kind::RTailOrdered);
    t.r_ = r;
    return t;
  }

  constexpr Kind kind() const { return kind_; }
  constexpr int r() const { return r_; }
  friend constexpr bool operator==(const ClassTag&, const ClassTag&) = default;

 private:
  Kind kind_;
  int r_ = 0;
};

std::string to_string(const ClassTag& c);

// Throws DomainError for RTailOrdered(r) with r outside [1, n].
bool is_in_class(const Permutation& p, const ClassTag& c);

// Visits the class in lexicographic order of the word.
void for_each_in_class(int n, const ClassTag& c, const std::function<void(const Permutation&)>& visit,
                       const Budget& budget = {});
std::vector<Permutation> enumerate(int n, const ClassTag& c, const Budget& budget = {});
long long count_class(int n, const ClassTag& c, const Budget& budget = {});

// Order-insensitive equality of two families of vectors.
bool same_multiset(std::vector<StatVector> a, std::vector<StatVector> b);

// An endofunction of {1..n}, not necessarily bijective.
struct FunctionMap {
  int n = 0;
  std::vector<int> image;  // image[i-1] = f(i)

  FunctionMap() = default;
  explicit FunctionMap(std::vector<int> img);
  static FunctionMap of(const Permutation& p) { return FunctionMap(p.word()); }

  int operator()(int i) const { return image[static_cast<size_t>(i) - 1]; }
  friend bool operator==(const FunctionMap&, const FunctionMap&) = default;
};

struct Factor {
  FunctionMap map;          // connected map on [card subset]
  std::vector<int> subset;  // increasing elements of the sub-domain
};

// Connected components of the functional graph, relabeled order-preservingly,
// listed by smallest element.
std::vector<Factor> canonical_factorization(const FunctionMap& f);
int component_count(const FunctionMap& f);

enum class FunctionKind { UltimatelyIdempotent, Arborescence };

// Exhaustive scan of all n^n maps; n limited by budget.fn_scan_max.
Integer count_class_functions(int n, FunctionKind kind, const Budget& budget = {});

}  // namespace eulerian
