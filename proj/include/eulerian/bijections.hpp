#pragma once

#include <utility>
#include <vector>

#include "eulerian/permutation.hpp"

namespace eulerian {

// (k̄, q_k): the orbit maximum of k and the least q with σ^q(k) = k̄.
std::vector<std::pair<int, int>> orbit_keys(const Permutation& p);

// σ̂: elements listed by increasing orbit key.
Permutation fundamental(const Permutation& p);
// Inverse of fundamental, rebuilt from the left-to-right maxima of the word.
Permutation fundamental_inverse(const Permutation& tau);
// σ̃(k) = σ(n+1-k).
Permutation reverse_tilde(const Permutation& p);
// σ̌(k) = n+1-σ(n+1-k).
Permutation check_map(const Permutation& p);
// σζ^r with ζ = (2,3,…,n,1); r may be any integer.
Permutation zeta_compose(const Permutation& p, long r);

struct BarTrace {
  Permutation sigma1;  // σζ
  Permutation sigma2;  // fundamental(σ1)
  Permutation result;  // reverse_tilde(σ2)
};
BarTrace bar_map_trace(const Permutation& p);
// Carries E to M entrywise; derangements onto succession-free permutations.
Permutation bar_map(const Permutation& p);

struct PrimeTrace {
  Permutation hat;  // fundamental(σ)
  int i = 0;        // position of n in hat
  Permutation result;
};
// Requires σ(n) = 1; lands on permutations starting with n.
PrimeTrace prime_map_trace(const Permutation& p);
Permutation prime_map(const Permutation& p);

struct DoublePrimeTrace {
  Permutation sigma1;  // 1+σ followed by 1
  Permutation sigma2;  // prime_map(σ1)
  Permutation result;  // fundamental_inverse(σ2), a single cycle
};
// From permutations of [n-1] onto cyclic permutations of [n].
DoublePrimeTrace double_prime_map_trace(const Permutation& p);
Permutation double_prime_map(const Permutation& p);

}  // namespace eulerian
