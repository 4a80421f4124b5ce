#ifndef FERRERS_TREES_HPP
#define FERRERS_TREES_HPP

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/weighted_sum.hpp"

namespace ferrers {

/// The four linear forms of the edge-addition ratio
/// Sigma(G)/Sigma(H) = num_x/den_x * num_y/den_y.
struct RatioFactors {
  LinearForm num_x;
  LinearForm den_x;
  LinearForm num_y;
  LinearForm den_y;
};

/// Sigma(G) in factored form:
/// x_0..x_n * y_0..y_m * prod_p (y_0+..+y_{lambda_p-1})
///                     * prod_q (x_0+..+x_{lambda'_q-1}).
FactoredWeightedSum weighted_spanning_sum(const FerrersGraph& g);

/// tau(G) = prod_{p>=1} lambda_p * prod_{q>=1} lambda'_q.
BigInt spanning_tree_count(const FerrersGraph& g);

/// Ratio factors for adding the edge (u_i, v_j) to h, i, j >= 1. Throws
/// DomainError if the edge is present or the addition breaks downward
/// closure.
RatioFactors edge_addition_ratio(const FerrersGraph& h, int i, int j);

/// Number of spanning trees with a marked head in U and tail in V:
/// prod_{p>=0} lambda_p * prod_{q>=0} lambda'_q.
BigInt vertebrate_count(const FerrersGraph& g);

/// Placements of n+1 non-attacking rooks on the Ferrers board:
/// lambda_n * (lambda_{n-1} - 1) ... (lambda_0 - n); zero when any
/// factor is non-positive.
BigInt rook_count(const FerrersGraph& g);

/// Hamiltonian paths (up to reversal) = rook_count^2. Requires n = m;
/// throws DomainError otherwise.
BigInt hamiltonian_path_count(const FerrersGraph& g);

}  // namespace ferrers

#endif
