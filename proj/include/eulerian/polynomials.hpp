#pragma once

#include <string>
#include <vector>

#include "eulerian/parallel.hpp"
#include "eulerian/permutation.hpp"
#include "eulerian/poly.hpp"
#include "eulerian/witness.hpp"

namespace eulerian {

// A vector family whose |·| distribution is summed: ΓX over a class, where Γ
// has degree r with `primes` factors Δ' and the remaining factors Δ.
struct Statistic {
  enum class Base {
    E,              // E over all permutations of [n]
    DPlusDPrime,    // D + D' over all permutations of [n]
    M,              // M over all permutations of [n]
    D,              // D over all permutations of [n]
    DeltaECyclic,   // ΔE over cyclic permutations of [n+1]
    DeltaDFirstIsN  // ΔD over permutations of [n+1] starting with n+1
  };
  Base base = Base::E;
  int primes = 0;
};

std::string to_string(const Statistic& s);

// Σ t^{|Γ X σ|} by enumeration; ʳAₙ = n! when the degree reaches n, A₀ = 1.
Poly1 eulerian_by_enumeration(int n, int r, Statistic stat = {}, Execution ex = Execution::Parallel,
                              const Budget& budget = {});

// ʳAₙ from the first-column recurrence t·^{r+1}Aₙ = ʳAₙ + r(t-1)ʳA_{n-1}; 0 <= r <= n.
Poly1 eulerian_recurrence_shift(int n, int r);
// ʳAₙ from the coefficient recurrence, also checking the differential form; 0 <= r <= n.
Poly1 eulerian_recurrence_riordan(int n, int r);
// Coefficient k of ʳA_{n-1+r} by the alternating sum; r >= 1, 0 <= k <= n-1.
Integer eulerian_explicit(int n, int r, int k);
// All coefficients of ʳA_N assembled from eulerian_explicit; 1 <= r <= N.
Poly1 eulerian_explicit_poly(int N, int r);
// Canonical ʳAₙ (coefficient recurrence) with ʳAₙ = n! for r >= n.
Poly1 eulerian(int n, int r = 1);
// ʳAₙ / r!, the reduced table entries.
Poly1 eulerian_reduced(int n, int r);

enum class StirlingMode { Recurrence, QuasiPermutation };
// Second kind; 1 <= q <= p, quasi-permutation mode limited to p <= 8.
Integer stirling2(int p, int q, StirlingMode mode = StirlingMode::Recurrence);

Witness frobenius_identity(int n);
Witness riordan_stirling_identity(int n, int r);
Witness worpitzky(int m, int n);
Witness worpitzky_generalized(int m, int n, int r);

// Weakly increasing maps [n] -> [m], strictly increasing except at the
// distinguished indices (a strictly decreasing sequence in [n-1]).
Integer count_monotone_maps(int m, int n, const std::vector<int>& distinguished);

// r!·Σ t^{|ΔDσ|} over tail-ordered permutations against t^{n-r} ʳAₙ(1/t); r >= 2.
Witness newcomb_specialization(int n, int r, const Budget& budget = {});

enum class RoselleVia { ExcedanceOnDerangements, RisesOnSuccessionFree };
Poly1 roselle_polynomial(int n, RoselleVia via = RoselleVia::ExcedanceOnDerangements,
                         Execution ex = Execution::Parallel, const Budget& budget = {});
// Bₙ = Σ_k (-1)^{n-k} C(n,k) A_k, usable beyond the enumeration budget.
Poly1 roselle_from_eulerian(int n);

// Āₙ(t,t') = Σ t'^{fixed points} t^{|ΔEσ|}; outer variable t'. Cached per n.
Poly2 abar_polynomial(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// Āₙ(t,t) = ⁰Aₙ, Āₙ(t,1) = Aₙ, Āₙ(t,0) = Bₙ.
Witness abar_specializations(int n, const Budget& budget = {});

// Qₙ(t,r) = Σ t^{|ΔEσ|} r^{z(σ)}; outer variable r.
Poly2 q_polynomial(int n, Execution ex = Execution::Parallel, const Budget& budget = {});
// ʳA_{n+r-1}(t) = (r-1)! Qₙ(t,r) at integer r >= 1.
Witness q_eulerian_identity(int n, int r, const Budget& budget = {});
// Σ t^{|Mσ|} r^{s(σ)} = tⁿ Qₙ(1/t, r), bivariate.
Witness q_saillant_identity(int n, const Budget& budget = {});

// Σ t^{|ΛʳEφ|} over injections [n-r] -> [n]; equals ʳAₙ/r!.
Poly1 injection_interpretation(int n, int r, const Budget& budget = {});

enum class WhichPoly { A, B };
Integer eval_at_minus_one(int n, WhichPoly which);

}  // namespace eulerian
