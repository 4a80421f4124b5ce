#ifndef FERRERS_CSF_HPP
#define FERRERS_CSF_HPP

#include <span>
#include <utility>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/expansion.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

/// Red-blue coloring of a Ferrers diagram, recorded as the set of red
/// boxes (i, j) with j < lambda_i.
struct RBColoring {
  std::vector<std::pair<int, int>> red_boxes;
};

/// Connected components of the red boxes' row-column incidence.
struct Constitution {
  struct Constituent {
    std::vector<int> rows;
    std::vector<int> cols;
    int size() const {
      return static_cast<int>(rows.size() + cols.size());
    }
  };
  std::vector<Constituent> constituents;
  /// Rows and columns containing no red box.
  int blank_lines = 0;
};

/// Components via union-find over rows and columns, one union per red
/// box. Throws DomainError on a coordinate outside the diagram.
Constitution constitution(const RBColoring& coloring, const Partition& p);

/// X_G in the power-sum basis:
/// sum over red-blue colorings of (-1)^{#red} p_{r_1}..p_{r_k} p_1^b.
/// The 2^boxes enumeration refuses diagrams above box_limit; it may be
/// split across threads.
PBasisExpansion csf_p_basis(const FerrersGraph& g, int box_limit = 24,
                            int threads = 1);

/// Closed form for the hook partition (m+1)1^n.
PBasisExpansion csf_hook_p_basis(int m, int n);

/// X_{K_{n,m}} in the monomial basis via stable partitions (partition m^n;
/// note the part sizes are n and m here, not n+1 and m+1). Guarded by
/// Bell(n) * Bell(m) <= pair_limit.
MBasisExpansion csf_complete_bipartite_m_basis(
    int n, int m, long long pair_limit = 1000000);

/// Checks n! m! [s^n t^m] prod_i (e^{s x_i} + e^{t x_i} - 1) against the
/// specialized X_{K_{n,m}}; K_{0,m} and K_{n,0} are edgeless.
bool egf_coefficient_check(int n, int m,
                           std::span<const Rational> var_values);

/// All set partitions of {0..n-1} as restricted-growth strings, in
/// canonical order.
std::vector<std::vector<int>> enumerate_set_partitions(int n);

}  // namespace ferrers

#endif
