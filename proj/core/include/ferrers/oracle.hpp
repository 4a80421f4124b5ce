#ifndef FERRERS_ORACLE_HPP
#define FERRERS_ORACLE_HPP

#include <span>
#include <utility>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/polynomial.hpp"
#include "ferrers/weighted_sum.hpp"

// Brute-force ground truth. Nothing here calls the closed-form modules;
// tests compare across the boundary.
namespace ferrers::oracle {

using EdgeSet = std::vector<std::pair<int, int>>;  // (row i, column j)

/// Kirchhoff determinant of a Laplacian minor, by exact fraction-free
/// (Bareiss) elimination.
BigInt spanning_count_matrix_tree(const FerrersGraph& g,
                                  ResourceGuard guard = {});

/// All spanning trees as explicit edge sets, by exhaustive search.
std::vector<EdgeSet> spanning_trees_enumerate(
    const FerrersGraph& g, ResourceGuard guard = {.max_boxes = 10});

/// Sum over enumerated spanning trees of the degree-monomial weight
/// sigma(T) at the given assignment.
Rational weighted_spanning_sum_enumerated(
    const FerrersGraph& g, const Assignment& assignment,
    ResourceGuard guard = {.max_boxes = 10});

/// Hamiltonian paths by DFS, each reversal pair counted once.
BigInt hamiltonian_paths(const FerrersGraph& g, ResourceGuard guard = {});

/// Bijections pi on U + V with every (z, pi(z)) an edge; requires n = m.
BigInt permissible_bijections(const FerrersGraph& g,
                              ResourceGuard guard = {.max_vertices = 5});

/// Proper colorings with colors {1..t}, counted by backtracking.
BigInt chromatic_value(const FerrersGraph& g, int t,
                       ResourceGuard guard = {});

/// Exact interpolation of chromatic_value through t = 0..vertex count.
IntPolynomial chromatic_poly(const FerrersGraph& g,
                             ResourceGuard guard = {});

/// Permutations of S_{|w|+1} whose excedance word is w, by enumeration.
BigInt excedance(const ABWord& w, ResourceGuard guard = {});

/// Acyclic orientations with sink_vertex as the unique sink, over all
/// 2^edges orientations. Vertices are indexed u_i -> i, v_j -> n+1+j.
/// Acyclicity is decided by the absence of directed 4-cycles and
/// cross-checked against full cycle detection on every orientation.
BigInt acyclic_unique_sink(const FerrersGraph& g, int sink_vertex,
                           ResourceGuard guard = {});

/// Red-blue colorings of the diagram with no alternating 2x2 pattern,
/// given_row the unique all-red row, and no all-blue column.
BigInt coloring_corollary(const Partition& p, int given_row,
                          ResourceGuard guard = {});

/// Sum over proper colorings with k = |values| colors of the product of
/// values over the vertices.
Rational csf_specialized(const FerrersGraph& g,
                         std::span<const Rational> values,
                         ResourceGuard guard = {.max_vertices = 10});

}  // namespace ferrers::oracle

#endif
