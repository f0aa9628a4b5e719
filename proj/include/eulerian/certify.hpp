#pragma once

#include "eulerian/bijections.hpp"
#include "eulerian/parallel.hpp"
#include "eulerian/witness.hpp"

// Exhaustive checks that each bijection is one on its stated domain and
// carries the statistic it is built to carry. Every check visits the whole
// domain and reports the first counterexample in lexicographic order.
namespace eulerian {

// Eσ = (D+D')σ̂, ΔEσ = ΔDσ̂, σ̂(n) = σ(n), round trip, bijective, circular onto first-is-n.
Witness certify_fundamental(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// Orbit maxima are the saillant values of σ̂; fixed points sit before a saillant or at the end.
Witness certify_orbit_maxima(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// k < σ(k), σ⁻¹(k) iff k = σ̂(j) is a local minimum of σ̂ with σ̂(j+1) not saillant.
Witness certify_local_minima(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// σ ↦ σ̂ maps the biexcedent class onto the alternating class; n even.
Witness certify_biexcedent_alternating(int n, const Budget& budget = {});
// Eσ = Mσ̄ entrywise, bijective, derangements onto succession-free.
Witness certify_bar(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// last-is-1 onto first-is-n with ΔEσ = ΔDσ'.
Witness certify_prime(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// S_{n-1} onto circular permutations of [n] with Eσ = ΔEσ''; n >= 1.
Witness certify_double_prime(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// Mσ̃(1) = σ(n) and Mσ̃(k+1) = ΔDσ(k).
Witness certify_reverse(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// |Eσ̌| + |ΔEσ| = n and σ̌ is an involution.
Witness certify_check(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// Δ'^r Eσ = Δ^r E(σζ^r) for 0 <= r <= n.
Witness certify_rotation(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// D entries are 0 or >= 2 with Dσ(n) = 0, |Eσ| = |E'σ| + |ΔEσ|,
// biexcedent permutations have only even cycles.
Witness certify_vector_invariants(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// ΓE, Γ(D+D'), ΓM over S_n, ΓΔE over circular S_{n+1} and ΓΔD over
// first-is-n S_{n+1} agree as multisets; ΓD joins them iff Γ has a Δ.
Witness certify_vector_families(int n, int deltas, int primes, const Budget& budget = {});

struct NamedWitness {
  std::string id;
  Witness witness;
};
// The worked example σ = 6 4 1 2 5 3: every vector and image against its
// printed value, plus the five biexcedent permutations of [4] and their images.
std::vector<NamedWitness> running_example();

}  // namespace eulerian
