#include "eulerian/certify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace eulerian {

namespace {

struct Failure {
  std::string lhs, rhs;
};

using Check = std::function<std::optional<Failure>(const Permutation&)>;
using Image = std::function<Permutation(const Permutation&)>;

struct Tally {
  long long checked = 0, failed = 0;
  std::string example;
  Failure first;
  std::vector<Permutation> images;
};

Tally run(int n, const ClassTag& c, const Check& check, const Image& image, Execution ex, const Budget& budget) {
  auto visit = [&](Tally& t, const Permutation& p) {
    ++t.checked;
    if (auto f = check(p); f && t.failed++ == 0) {
      t.example = to_string(p);
      t.first = std::move(*f);
    }
    if (image) t.images.push_back(image(p));
  };
  auto merge = [](Tally a, const Tally& b) {
    if (a.failed == 0 && b.failed > 0) {
      a.example = b.example;
      a.first = b.first;
    }
    a.checked += b.checked;
    a.failed += b.failed;
    a.images.insert(a.images.end(), b.images.begin(), b.images.end());
    return a;
  };
  return reduce_class(n, c, Tally{}, visit, merge, ex, budget);
}

std::optional<Failure> differ(const StatVector& a, const StatVector& b) {
  if (a == b) return std::nullopt;
  return Failure{to_string(a), to_string(b)};
}

// Images must be distinct and, when given, exactly the target class.
std::optional<Witness> bijectivity(std::vector<Permutation> images, int m, std::optional<ClassTag> target,
                                   const std::string& detail, const Budget& budget) {
  std::sort(images.begin(), images.end());
  auto dup = std::adjacent_find(images.begin(), images.end());
  if (dup != images.end()) return Witness{false, to_string(*dup), "distinct images", detail + ": repeated image"};
  if (target) {
    auto expected = enumerate(m, *target, budget);
    if (images != expected)
      return Witness{false, std::to_string(images.size()) + " images", std::to_string(expected.size()) + " in " + to_string(*target),
                     detail + ": image is not the target class"};
  }
  return std::nullopt;
}

Witness report(const Tally& t, const std::string& detail) {
  if (t.failed)
    return Witness{false, t.first.lhs, t.first.rhs,
                   detail + ": " + std::to_string(t.failed) + " of " + std::to_string(t.checked) + " fail, first at " + t.example};
  return Witness{true, std::to_string(t.checked) + " checked", "0 failures", detail};
}

Witness finish(const Tally& t, const std::string& detail, int m, std::optional<ClassTag> target, const Budget& budget) {
  if (t.failed) return report(t, detail);
  if (auto w = bijectivity(t.images, m, target, detail, budget)) return *w;
  return report(t, detail);
}

std::string label(const char* name, int n) { return std::string(name) + " n=" + std::to_string(n); }

}  // namespace

Witness certify_fundamental(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation h = fundamental(p);
    StatVector e = excedance_vector(p), d = descent_vector(h);
    if (auto f = differ(e, d + dprime_vector(h))) return f;
    if (n >= 1)
      if (auto f = differ(delta(e), delta(d))) return f;
    if (h(n) != p(n)) return Failure{"last letter " + std::to_string(h(n)), std::to_string(p(n))};
    if (fundamental_inverse(h) != p) return Failure{"round trip " + to_string(fundamental_inverse(h)), to_string(p)};
    if (cycle_count(p) == 1 && h(1) != n) return Failure{"circular image " + to_string(h), "first letter n"};
    return std::nullopt;
  };
  Tally t = run(n, ClassTag::Kind::All, check, fundamental, ex, budget);
  return finish(t, label("fundamental", n), n, ClassTag::Kind::All, budget);
}

Witness certify_orbit_maxima(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation h = fundamental(p), pos = h.inverse();
    std::vector<bool> saillant(static_cast<size_t>(n) + 2, false), maximum(static_cast<size_t>(n) + 1, false);
    for (int j : saillants(h)) saillant[h(j)] = true;
    for (const auto& cycle : orbits(p)) maximum[cycle.front()] = true;
    for (int k = 1; k <= n; ++k) {
      if (maximum[k] != saillant[k]) return Failure{"orbit maximum " + std::to_string(k), "saillant in " + to_string(h)};
      int j = pos(k);
      bool closes = saillant[k] && (j == n || saillant[h(j + 1)]);
      if ((p(k) == k) != closes) return Failure{"fixed point " + std::to_string(k), "saillant pair in " + to_string(h)};
    }
    return std::nullopt;
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("orbit maxima", n));
}

Witness certify_local_minima(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation h = fundamental(p), inv = p.inverse();
    for (int j = 1; j <= n; ++j) {
      int k = h(j);
      bool lhs = k < p(k) && k < inv(k);
      bool rhs = j != 1 && ((j <= n - 1 && h(j) < h(j - 1) && h(j) < h(j + 1)) || (j == n && h(j) < h(j - 1)));
      if (lhs != rhs)
        return Failure{std::to_string(k) + (lhs ? " below both neighbours in the cycle" : " not below both"),
                       "position " + std::to_string(j) + " of " + to_string(h)};
    }
    return std::nullopt;
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("local minima", n));
}

Witness certify_biexcedent_alternating(int n, const Budget& budget) {
  if (n % 2) throw DomainError("biexcedent permutations exist only for even n");
  Tally t = run(n, ClassTag::Kind::Biexcedent, [](const Permutation&) { return std::optional<Failure>{}; }, fundamental,
                Execution::Serial, budget);
  return finish(t, label("biexcedent to alternating", n), n, ClassTag::Kind::Alternating, budget);
}

Witness certify_bar(int n, Execution ex, const Budget& budget) {
  Check check = [](const Permutation& p) -> std::optional<Failure> {
    Permutation b = bar_map(p);
    if (auto f = differ(excedance_vector(p), rise_vector(b))) return f;
    if (is_in_class(p, ClassTag::Kind::Derangement) && !is_in_class(b, ClassTag::Kind::SuccessionFree))
      return Failure{to_string(b), "succession-free"};
    return std::nullopt;
  };
  Tally t = run(n, ClassTag::Kind::All, check, bar_map, ex, budget);
  Witness w = finish(t, label("bar", n), n, ClassTag::Kind::All, budget);
  if (!w.ok) return w;
  long long der = count_class(n, ClassTag::Kind::Derangement, budget), free = count_class(n, ClassTag::Kind::SuccessionFree, budget);
  if (der != free) return Witness{false, std::to_string(der), std::to_string(free), label("derangements against succession-free", n)};
  return w;
}

Witness certify_prime(int n, Execution ex, const Budget& budget) {
  Check check = [](const Permutation& p) -> std::optional<Failure> {
    Permutation q = prime_map(p);
    if (!is_in_class(q, ClassTag::Kind::FirstIsN)) return Failure{to_string(q), "first letter n"};
    return differ(delta(excedance_vector(p)), delta(descent_vector(q)));
  };
  Tally t = run(n, ClassTag::Kind::LastIs1, check, prime_map, ex, budget);
  return finish(t, label("prime", n), n, ClassTag::Kind::FirstIsN, budget);
}

Witness certify_double_prime(int n, Execution ex, const Budget& budget) {
  if (n < 1) throw DomainError("double prime map needs n >= 1");
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation q = double_prime_map(p);
    if (q.size() != n || cycle_count(q) != 1) return Failure{to_string(q), "circular of size " + std::to_string(n)};
    return differ(excedance_vector(p), delta(excedance_vector(q)));
  };
  Tally t = run(n - 1, ClassTag::Kind::All, check, double_prime_map, ex, budget);
  return finish(t, label("double prime", n), n, ClassTag::Kind::Circular, budget);
}

Witness certify_reverse(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation r = reverse_tilde(p);
    if (reverse_tilde(r) != p) return Failure{"not an involution at " + to_string(r), to_string(p)};
    std::vector<int> expected{p(n)};
    if (n >= 1) {
      StatVector tail = delta(descent_vector(p));
      expected.insert(expected.end(), tail.entries().begin(), tail.entries().end());
    }
    return differ(rise_vector(r), StatVector(expected));
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("reverse", n));
}

Witness certify_check(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    Permutation c = check_map(p);
    if (check_map(c) != p) return Failure{"not an involution at " + to_string(c), to_string(p)};
    int sum = positive_count(excedance_vector(c)) + positive_count(delta(excedance_vector(p)));
    if (sum != n) return Failure{std::to_string(sum), std::to_string(n)};
    return std::nullopt;
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("check", n));
}

Witness certify_rotation(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    for (int r = 0; r <= n; ++r)
      if (auto f = differ(apply_monomial(excedance_vector(p), 0, r), apply_monomial(excedance_vector(zeta_compose(p, r)), r, 0))) {
        f->lhs = "r=" + std::to_string(r) + " " + f->lhs;
        return f;
      }
    return std::nullopt;
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("rotation", n));
}

Witness certify_vector_invariants(int n, Execution ex, const Budget& budget) {
  Check check = [n](const Permutation& p) -> std::optional<Failure> {
    StatVector d = descent_vector(p), e = excedance_vector(p);
    for (int x : d.entries())
      if (x == 1) return Failure{"D=" + to_string(d), "entries 0 or >= 2"};
    if (n >= 1 && d.at(n) != 0) return Failure{"D=" + to_string(d), "last entry 0"};
    if (n >= 1 && positive_count(e) != positive_count(fixed_point_vector(p)) + positive_count(delta(e)))
      return Failure{"|E|=" + std::to_string(positive_count(e)), "|E'| + |ΔE|"};
    if (is_in_class(p, ClassTag::Kind::Biexcedent))
      for (const auto& cycle : orbits(p))
        if (cycle.size() % 2) return Failure{"odd cycle in biexcedent " + to_string(p), "even cycles"};
    if (n >= 2)
      for (const StatVector& v : {e, d}) {
        if (delta(delta_prime(v)) != delta_prime(delta(v)) || delta(delta_second(v)) != delta_second(delta(v)) ||
            delta_prime(delta_second(v)) != delta_second(delta_prime(v)))
          return Failure{"operators on " + to_string(v), "commute"};
        if (delta(v) != delta_second(lambda_op(v)) || delta(v) != lambda_op(delta_second(v)))
          return Failure{"Δ on " + to_string(v), "Δ''Λ = ΛΔ''"};
      }
    return std::nullopt;
  };
  return report(run(n, ClassTag::Kind::All, check, nullptr, ex, budget), label("vector invariants", n));
}

Witness certify_vector_families(int n, int deltas, int primes, const Budget& budget) {
  if (deltas < 0 || primes < 0 || deltas + primes > n) throw DomainError("operator degree must lie in [0, n]");
  require_within(n + 1, budget.max_n, "enumeration");
  using Family = std::vector<StatVector>;
  auto gamma = [&](StatVector v) { return apply_monomial(std::move(v), deltas, primes); };
  auto collect = [&](int m, ClassTag c, const std::function<StatVector(const Permutation&)>& f) {
    Family out;
    for_each_in_class(m, c, [&](const Permutation& p) { out.push_back(gamma(f(p))); }, budget);
    return out;
  };
  Family e = collect(n, ClassTag::Kind::All, excedance_vector);
  const std::pair<const char*, Family> others[] = {
      {"Γ(D+D')", collect(n, ClassTag::Kind::All, [](const Permutation& p) { return descent_vector(p) + dprime_vector(p); })},
      {"ΓM", collect(n, ClassTag::Kind::All, rise_vector)},
      {"ΓΔE circular", collect(n + 1, ClassTag::Kind::Circular, [](const Permutation& p) { return delta(excedance_vector(p)); })},
      {"ΓΔD first-is-n", collect(n + 1, ClassTag::Kind::FirstIsN, [](const Permutation& p) { return delta(descent_vector(p)); })},
  };
  const std::string params = " n=" + std::to_string(n) + " deltas=" + std::to_string(deltas) + " primes=" + std::to_string(primes);
  for (const auto& [name, family] : others)
    if (!same_multiset(e, family)) return Witness{false, "ΓE", name, "multisets differ" + params};
  bool with_d = same_multiset(e, collect(n, ClassTag::Kind::All, descent_vector));
  // Γ without Δ keeps vectors of length n - primes; D differs from E only when that is nonempty.
  bool expected = deltas > 0 || n - primes == 0;
  if (with_d != expected)
    return Witness{false, with_d ? "ΓD equals ΓE" : "ΓD differs", expected ? "equal" : "different", "ΓD against ΓE" + params};
  return Witness{true, "5 families equal", "ΓD " + std::string(expected ? "equal" : "different"), "vector families" + params};
}

std::vector<NamedWitness> running_example() {
  const Permutation sigma{6, 4, 1, 2, 5, 3};
  std::vector<NamedWitness> out;
  auto expect = [&](std::string id, const std::string& got, const std::string& printed) {
    out.push_back({std::move(id), Witness{got == printed, got, printed, "printed value"}});
  };
  const StatVector e = excedance_vector(sigma), d = descent_vector(sigma);
  expect("E", to_string(e), "(6,3,0,0,1,0)");
  expect("ΔE", to_string(delta(e)), "(5,2,0,0,0)");
  expect("Δ'E", to_string(delta_prime(e)), "(3,0,0,1,0)");
  expect("Δ''E", to_string(delta_second(e)), "(6,3,0,0,1)");
  expect("Δ²E", to_string(apply_monomial(e, 2, 0)), "(4,1,0,0)");
  expect("ΔΔ'E", to_string(delta(delta_prime(e))), "(2,0,0,0)");
  expect("Δ'ΔE", to_string(delta_prime(delta(e))), "(2,0,0,0)");
  expect("Δ'²E", to_string(apply_monomial(e, 0, 2)), "(0,0,1,0)");
  expect("D", to_string(d), "(4,0,3,3,0,0)");
  expect("M", to_string(rise_vector(sigma)), "(6,1,3,0,0,0)");
  expect("ΔD", to_string(delta(d)), "(3,0,2,2,0)");
  const Permutation tilde = reverse_tilde(sigma);
  expect("tilde", to_string(tilde), "3 5 2 1 4 6");
  expect("M tilde", to_string(rise_vector(tilde)), "(3,3,0,2,2,0)");
  expect("z", std::to_string(cycle_count(sigma)), "3");
  const Permutation hat = fundamental(sigma);
  expect("hat", to_string(hat), "4 2 5 6 1 3");
  expect("(D+D') hat", to_string(descent_vector(hat) + dprime_vector(hat)), "(6,3,0,0,1,0)");
  expect("ΔD hat", to_string(delta(descent_vector(hat))), "(5,2,0,0,0)");
  const BarTrace bar = bar_map_trace(sigma);
  expect("bar sigma1", to_string(bar.sigma1), "4 1 2 5 3 6");
  expect("bar sigma2", to_string(bar.sigma2), "5 4 1 2 3 6");
  expect("bar", to_string(bar.result), "6 3 2 1 4 5");
  expect("ΔE sigma1", to_string(delta(excedance_vector(bar.sigma1))), "(3,0,0,1,0)");
  expect("ΔD sigma2", to_string(delta(descent_vector(bar.sigma2))), "(3,0,0,1,0)");
  expect("M bar", to_string(rise_vector(bar.result)), "(6,3,0,0,1,0)");
  const std::pair<Permutation, const char*> table[] = {{{2, 1, 4, 3}, "2 1 4 3"},
                                                       {{3, 4, 1, 2}, "3 1 4 2"},
                                                       {{4, 3, 2, 1}, "3 2 4 1"},
                                                       {{4, 3, 1, 2}, "4 1 3 2"},
                                                       {{3, 4, 2, 1}, "4 2 3 1"}};
  std::vector<Permutation> listed;
  for (const auto& [b, t] : table) {
    listed.push_back(b);
    expect("biexcedent " + to_string(b), to_string(fundamental(b)), t);
  }
  std::sort(listed.begin(), listed.end());
  auto all = enumerate(4, ClassTag::Kind::Biexcedent);
  out.push_back({"biexcedent class of 4",
                 Witness{all == listed, std::to_string(all.size()) + " permutations", "5 listed", "printed table rows"}});
  return out;
}

}  // namespace eulerian
