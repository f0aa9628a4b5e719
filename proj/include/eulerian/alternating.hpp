#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/parallel.hpp"
#include "eulerian/polynomials.hpp"

namespace eulerian {

// Declaration order fixes the word order d < d̄ < m < m̄.
enum class Letter : unsigned char { Descent, MarkedDescent, Rise, MarkedRise };

using VWord = std::vector<Letter>;
// Multiplicities are kept strictly positive.
using WordWeightedSet = std::map<VWord, Integer>;

// d, D (d̄), m, M (m̄), no separators.
std::string to_string(Letter x);
std::string to_string(const VWord& w);
VWord parse_vword(std::string_view text);

// V(σ) for σ(1) = n, reading σ(n+1) as σ(1).
VWord v_word(const Permutation& p);
// V over the permutations of [n] that start with n.
WordWeightedSet v_words(int n, Execution ex = Execution::Parallel, const Budget& budget = {});

// g ∂/∂x: every occurrence of x replaced by g in turn, summed.
WordWeightedSet derive(const WordWeightedSet& ws, Letter x, const VWord& g);
// dd̄ ∂/∂d̄ + m̄m ∂/∂m̄ + d̄m̄ ∂/∂d + d̄m̄ ∂/∂m.
WordWeightedSet nabla(const WordWeightedSet& ws);

// V of size n is ∇ applied to V of size n-1; 3 <= n.
Witness verify_nabla_generates(int n, const Budget& budget = {});

// Exponents of d, d̄, m, m̄.
using Monomial = std::array<int, 4>;
using CommutativeSet = std::map<Monomial, Integer>;
CommutativeSet abelianize(const WordWeightedSet& ws);
CommutativeSet nabla(const CommutativeSet& cs);
// Abelianizing after ∇ equals ∇ after abelianizing, on V of size n-1.
Witness verify_nabla_commutes(int n, const Budget& budget = {});

enum class CTriangleMode { Recurrence, Abelianization };
// c[m][k] for 2 <= m <= n, 0 <= k <= m; zero outside 2 <= 2k <= m.
std::vector<std::vector<Integer>> c_triangle(int n, CTriangleMode mode = CTriangleMode::Recurrence,
                                             const Budget& budget = {});
// t·A_{n-1}(t) = Σ c_{n,k} t^k (1+t)^{n-2k}; n >= 2.
Witness verify_c_triangle_identity(int n);

// Number of d or d̄ letters in V(σ) equals |ΔDσ| over the first-is-n class.
Witness verify_descent_letters(int n, const Budget& budget = {});

enum class EulerMode { Enumeration, CTriangle, Series };
// t_0 = 1, t_1, ..., t_N; enumeration stops at N = 10.
std::vector<Integer> euler_numbers(int N, EulerMode mode, const Budget& budget = {});

// A_{2p}(-1) = 0 and (-1)^{p-1} A_{2p-1}(-1) = c_{2p,p}; the count of
// alternating permutations of [2p-1] joins in while it is enumerable.
Witness verify_eulerian_alternating(int p, const Budget& budget = {});

// Alternating members starting with 2p are exactly those with V = (d̄m̄)^p,
// and they are as many as the alternating permutations of [2p-1].
Witness verify_alternating_words(int p, const Budget& budget = {});
// B_{2p-1}(-1) = 0, (-1)^p B_{2p}(-1) = t_{2p}, card biexcedent = t_{2p},
// and the cyclic biexcedent count equals t_{2p-1}.
Witness verify_roselle_alternating(int p, const Budget& budget = {});

// σ in S_{n-1} to σ' in S_n with σ'(1) = n, σ'(1+j) = n - σ(n-j).
Permutation descent_bridge(const Permutation& sigma);
// The literal word (n, n+1-σ(n-1), ..., n+1-σ(1)); not a permutation in general.
std::vector<int> descent_bridge_printed(const Permutation& sigma);
// Both counting clauses for every σ in S_{n-1}; n >= 2.
Witness verify_descent_bridge_letters(int n, const Budget& budget = {});
Witness verify_descent_bridge_valleys(int n, const Budget& budget = {});

}  // namespace eulerian
