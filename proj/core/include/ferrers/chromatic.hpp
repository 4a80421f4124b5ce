#ifndef FERRERS_CHROMATIC_HPP
#define FERRERS_CHROMATIC_HPP

#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/polynomial.hpp"

namespace ferrers {

/// Vector (r_0, ..., r_m) with r_0 = 1 and unit-or-zero increments.
struct RVector {
  std::vector<int> entries;
  bool operator==(const RVector&) const = default;
};

/// All 2^m vectors of R_m, ordered by a binary counter on the increments
/// (bit i = increment between r_i and r_{i+1}).
std::vector<RVector> enumerate_r_vectors(int m);

/// Number of flat steps r_{i+1} = r_i, for i in 0..m-1.
int h_statistic(const RVector& r);

/// [w] = sum over R_m of (-1)^{h(r)} r_0^{n_0+1} ... r_m^{n_m+1}:
/// the number of permutations in S_{|w|+1} with excedance word w.
BigInt excedance_statistic(const ABWord& w);

/// Chromatic polynomial of the word's Ferrers graph via the R_m sum.
/// Evaluates the sum on the orientation (word or its conjugate's word)
/// with the smaller b-count; the two graphs are isomorphic. The 2^m sum
/// may be split across threads.
IntPolynomial chromatic_polynomial(const ABWord& w, int threads = 1);

/// The R_m sum on the word exactly as given, without the transpose
/// reduction.
IntPolynomial chromatic_polynomial_direct(const ABWord& w, int threads = 1);

/// chi(b^m a^n) = sum_k S(m+1,k) t(t-1)..(t-k+1) (t-k)^{n+1}.
IntPolynomial chromatic_complete_bipartite(int n, int m);

/// Stirling number of the second kind; throws DomainError unless
/// 0 <= k <= m.
BigInt stirling2(int m, int k);

/// (-1)^{|w|+1} times the coefficient of t in chi(w); equals
/// excedance_statistic(w).
BigInt linear_coefficient_statistic(const ABWord& w);

/// chi(w b a^{k-1}) = t chi(w a^{k-1})
///                    + sum_{0<=i<=k-1} (-1)^{k-i} C(k,i) chi(w a^i).
bool chromatic_recursion_check(const ABWord& w, int k);

/// [u b a v] = [u a b v] + [u a v] + [u b v].
bool excedance_recursion_check(const ABWord& u, const ABWord& v);

}  // namespace ferrers

#endif
