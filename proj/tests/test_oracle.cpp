#include <vector>

#include "doctest.h"
#include "ferrers/errors.hpp"
#include "ferrers/oracle.hpp"

using namespace ferrers;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("matrix-tree determinant") {
  CHECK(oracle::spanning_count_matrix_tree(FerrersGraph{Partition({4, 4, 2})}) ==
        96);
  CHECK(oracle::spanning_count_matrix_tree(FerrersGraph{Partition({2, 1})}) ==
        1);
  CHECK(oracle::spanning_count_matrix_tree(FerrersGraph{Partition({1})}) == 1);
  CHECK_THROWS_AS(oracle::spanning_count_matrix_tree(
                      FerrersGraph{Partition({7, 7, 7, 7, 7, 7, 7})}),
                  ResourceError);
}

TEST_CASE("spanning tree enumeration") {
  const auto k22 = oracle::spanning_trees_enumerate(FerrersGraph{Partition({2, 2})});
  CHECK(k22.size() == 4);
  for (const auto& tree : k22) CHECK(tree.size() == 3);  // vertices - 1

  const auto path = oracle::spanning_trees_enumerate(FerrersGraph{Partition({2, 1})});
  CHECK(path.size() == 1);  // the graph is itself a tree
  CHECK(path.front().size() == 3);

  CHECK_THROWS_AS(oracle::spanning_trees_enumerate(FerrersGraph{Partition({4, 4, 4})}),
                  ResourceError);
}

TEST_CASE("enumeration agrees with the determinant") {
  for (const Partition& p :
       {Partition({3, 2}), Partition({3, 3, 1}), Partition({2, 2, 2})}) {
    const FerrersGraph g{p};
    CHECK(BigInt(oracle::spanning_trees_enumerate(g).size()) ==
          oracle::spanning_count_matrix_tree(g));
  }
}

TEST_CASE("hamiltonian path search") {
  CHECK(oracle::hamiltonian_paths(FerrersGraph{Partition({2, 2})}) == 4);
  CHECK(oracle::hamiltonian_paths(FerrersGraph{Partition({3, 3, 3})}) == 36);
  CHECK(oracle::hamiltonian_paths(FerrersGraph{Partition({2, 1})}) == 1);
  // u_1 has degree 1, but both endpoints of an alternating path on
  // 2 + 3 vertices lie on the column side
  CHECK(oracle::hamiltonian_paths(FerrersGraph{Partition({3, 1})}) == 0);
}

TEST_CASE("permissible bijections") {
  CHECK(oracle::permissible_bijections(FerrersGraph{Partition({1})}) == 1);
  CHECK(oracle::permissible_bijections(FerrersGraph{Partition({2, 2})}) == 4);
  CHECK(oracle::permissible_bijections(FerrersGraph{Partition({3, 3, 3})}) ==
        36);
  // (2,1) is square-shaped: 2 rows, 2 columns; biadjacency permanent 1
  CHECK(oracle::permissible_bijections(FerrersGraph{Partition({2, 1})}) == 1);
  CHECK_THROWS_AS(oracle::permissible_bijections(FerrersGraph{Partition({3, 1})}),
                  DomainError);
}

TEST_CASE("proper coloring count") {
  CHECK(oracle::chromatic_value(FerrersGraph{Partition({1})}, 2) == 2);
  CHECK(oracle::chromatic_value(FerrersGraph{Partition({2, 2})}, 2) == 2);
  CHECK(oracle::chromatic_value(FerrersGraph{Partition({2, 2})}, 3) == 18);
  CHECK(oracle::chromatic_value(FerrersGraph{Partition({1})}, 0) == 0);
  CHECK_THROWS_AS(oracle::chromatic_value(FerrersGraph{Partition({1})}, -1),
                  DomainError);
  CHECK_THROWS_AS(oracle::chromatic_value(FerrersGraph{Partition({1})}, 7),
                  ResourceError);
}

TEST_CASE("chromatic polynomial interpolation") {
  CHECK(oracle::chromatic_poly(FerrersGraph{Partition({1})}) ==
        IntPolynomial({0, -1, 1}));
  CHECK(oracle::chromatic_poly(FerrersGraph{Partition({2, 2})}) ==
        IntPolynomial({0, -3, 6, -4, 1}));
}

TEST_CASE("excedance enumeration") {
  CHECK(oracle::excedance(ABWord::parse("")) == 1);
  CHECK(oracle::excedance(ABWord::parse("ba")) == 3);
  CHECK(oracle::excedance(ABWord::parse("ab")) == 1);
  CHECK_THROWS_AS(oracle::excedance(ABWord::parse("ababababa")),
                  ResourceError);
}

TEST_CASE("acyclic orientations with a unique sink") {
  const FerrersGraph single{Partition({1})};
  CHECK(oracle::acyclic_unique_sink(single, single.u_vertex(0)) == 1);
  CHECK(oracle::acyclic_unique_sink(single, single.v_vertex(0)) == 1);

  const FerrersGraph square{Partition({2, 2})};  // the 4-cycle
  CHECK(oracle::acyclic_unique_sink(square, square.u_vertex(0)) == 3);
  CHECK(oracle::acyclic_unique_sink(square, square.v_vertex(1)) == 3);

  CHECK_THROWS_AS(oracle::acyclic_unique_sink(single, 5), DomainError);
  CHECK_THROWS_AS(oracle::acyclic_unique_sink(
                      FerrersGraph{Partition({4, 4, 4, 4})}, 0),
                  ResourceError);
}

TEST_CASE("restricted red-blue pattern count") {
  CHECK(oracle::coloring_corollary(Partition({1}), 0) == 1);
  CHECK(oracle::coloring_corollary(Partition({2, 2}), 0) == 3);
  CHECK(oracle::coloring_corollary(Partition({2, 2}), 1) == 3);
  CHECK_THROWS_AS(oracle::coloring_corollary(Partition({1}), 1), DomainError);
  CHECK_THROWS_AS(oracle::coloring_corollary(Partition({4, 4, 4, 4}), 0),
                  ResourceError);
}

TEST_CASE("specialized csf") {
  const std::vector<Rational> pair{1, 1};
  CHECK(oracle::csf_specialized(FerrersGraph{Partition({1})}, pair) == 2);
  CHECK(oracle::csf_specialized(FerrersGraph{Partition({2})}, pair) == 2);
  const std::vector<Rational> triple{1, 1, 1};
  CHECK(oracle::csf_specialized(FerrersGraph{Partition({2, 2})}, triple) ==
        18);
  CHECK_THROWS_AS(oracle::csf_specialized(
                      FerrersGraph{Partition({6, 6, 6, 6, 6})}, triple),
                  ResourceError);
}

TEST_SUITE_END();
