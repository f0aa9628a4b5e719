#include "eulerian/bijections.hpp"

#include <algorithm>
#include <numeric>

namespace eulerian {

std::vector<std::pair<int, int>> orbit_keys(const Permutation& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> keys(static_cast<size_t>(n));
  for (const auto& cycle : orbits(p)) {
    const int len = static_cast<int>(cycle.size());
    // cycle[i] = σ^i(max), so σ^(len-i)(cycle[i]) = max.
    for (int i = 0; i < len; ++i) keys[cycle[i] - 1] = {cycle[0], (len - i) % len};
  }
  return keys;
}

Permutation fundamental(const Permutation& p) {
  auto keys = orbit_keys(p);
  std::vector<int> w(keys.size());
  std::iota(w.begin(), w.end(), 1);
  std::sort(w.begin(), w.end(), [&](int a, int b) { return keys[a - 1] < keys[b - 1]; });
  return Permutation::trusted(std::move(w));
}

Permutation fundamental_inverse(const Permutation& tau) {
  const int n = tau.size();
  std::vector<int> sigma(static_cast<size_t>(n), 0);
  auto starts = saillants(tau);
  starts.push_back(n + 1);
  for (size_t s = 0; s + 1 < starts.size(); ++s) {
    // Segment (m, a1, …, al) is the orbit of m read backwards from m.
    const int lo = starts[s], hi = starts[s + 1] - 1;
    const int m = tau(lo);
    int succ = m;
    for (int k = lo + 1; k <= hi; ++k) {
      sigma[tau(k) - 1] = succ;
      succ = tau(k);
    }
    sigma[m - 1] = succ;
  }
  return Permutation::trusted(std::move(sigma));
}

Permutation reverse_tilde(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation::trusted(std::move(w));
}

Permutation check_map(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = n + 1 - p(n + 1 - k);
  return Permutation::trusted(std::move(w));
}

Permutation zeta_compose(const Permutation& p, long r) {
  const int n = p.size();
  if (n == 0) return p;
  long shift = ((r % n) + n) % n;
  std::vector<int> w(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) w[k - 1] = p(static_cast<int>((k - 1 + shift) % n) + 1);
  return Permutation::trusted(std::move(w));
}

BarTrace bar_map_trace(const Permutation& p) {
  BarTrace t;
  t.sigma1 = zeta_compose(p, 1);
  t.sigma2 = fundamental(t.sigma1);
  t.result = reverse_tilde(t.sigma2);
  return t;
}

Permutation bar_map(const Permutation& p) { return bar_map_trace(p).result; }

PrimeTrace prime_map_trace(const Permutation& p) {
  const int n = p.size();
  if (!is_in_class(p, ClassTag::Kind::LastIs1))
    throw DomainError("prime map requires a permutation ending with 1 (class last-is-1)");
  PrimeTrace t;
  t.hat = fundamental(p);
  t.i = t.hat.inverse()(n);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int k = t.i; k <= n; ++k) w.push_back(t.hat(k));
  for (int k = 1; k < t.i; ++k) w.push_back(t.hat(k));
  t.result = Permutation::trusted(std::move(w));
  return t;
}

Permutation prime_map(const Permutation& p) { return prime_map_trace(p).result; }

DoublePrimeTrace double_prime_map_trace(const Permutation& p) {
  std::vector<int> w;
  w.reserve(p.word().size() + 1);
  for (int v : p.word()) w.push_back(v + 1);
  w.push_back(1);
  DoublePrimeTrace t;
  t.sigma1 = Permutation::trusted(std::move(w));
  t.sigma2 = prime_map(t.sigma1);
  t.result = fundamental_inverse(t.sigma2);
  return t;
}

Permutation double_prime_map(const Permutation& p) { return double_prime_map_trace(p).result; }

}  // namespace eulerian
