#include "ferrers/trees.hpp"

#include <string>

#include "ferrers/errors.hpp"

namespace ferrers {

FactoredWeightedSum weighted_spanning_sum(const FerrersGraph& g) {
  const auto& lambda = g.partition().parts();
  const auto dual = g.dual().parts();
  const int n = g.row_count() - 1;
  const int m = g.col_count() - 1;
  FactoredWeightedSum sum;
  for (int p = 0; p <= n; ++p) sum.multiply_variable(Variable::x(p));
  for (int q = 0; q <= m; ++q) sum.multiply_variable(Variable::y(q));
  for (int p = 1; p <= n; ++p) {
    sum.multiply_factor(LinearForm::prefix_y(lambda[p]));
  }
  for (int q = 1; q <= m; ++q) {
    sum.multiply_factor(LinearForm::prefix_x(dual[q]));
  }
  return sum;
}

BigInt spanning_tree_count(const FerrersGraph& g) {
  const auto& lambda = g.partition().parts();
  const auto dual = g.dual().parts();
  BigInt count = 1;
  for (std::size_t p = 1; p < lambda.size(); ++p) count *= lambda[p];
  for (std::size_t q = 1; q < dual.size(); ++q) count *= dual[q];
  return count;
}

RatioFactors edge_addition_ratio(const FerrersGraph& h, int i, int j) {
  const auto& lambda = h.partition().parts();
  const int n = h.row_count() - 1;
  if (i < 1 || j < 1) {
    throw DomainError("edge addition requires i, j >= 1");
  }
  if (i > n || h.edge(i, j)) {
    throw DomainError("(u" + std::to_string(i) + ", v" + std::to_string(j) +
                      ") must be a non-edge of an existing row");
  }
  // appending box (i, j) must keep the diagram downward closed
  if (lambda[i] != j || lambda[i - 1] < j + 1) {
    throw DomainError("adding (u" + std::to_string(i) + ", v" +
                      std::to_string(j) + ") violates downward closure");
  }
  return RatioFactors{
      LinearForm::prefix_x(i + 1), LinearForm::prefix_x(i),
      LinearForm::prefix_y(j + 1), LinearForm::prefix_y(j)};
}

BigInt vertebrate_count(const FerrersGraph& g) {
  BigInt count = 1;
  for (int part : g.partition().parts()) count *= part;
  const DualPartition dual = g.dual();
  for (int part : dual.parts()) count *= part;
  return count;
}

BigInt rook_count(const FerrersGraph& g) {
  const auto& lambda = g.partition().parts();
  const int n = g.row_count() - 1;
  BigInt count = 1;
  for (int i = n; i >= 0; --i) {
    const int factor = lambda[i] - (n - i);
    if (factor <= 0) return 0;
    count *= factor;
  }
  return count;
}

BigInt hamiltonian_path_count(const FerrersGraph& g) {
  if (g.row_count() != g.col_count()) {
    throw DomainError(
        "Hamiltonian path count requires equal part sizes (n = m); got " +
        std::to_string(g.row_count()) + " rows and " +
        std::to_string(g.col_count()) + " columns");
  }
  const BigInt rooks = rook_count(g);
  return rooks * rooks;
}

}  // namespace ferrers
