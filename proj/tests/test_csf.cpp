#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "doctest.h"
#include "ferrers/csf.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/selftest.hpp"

using namespace ferrers;

namespace {

// independent component count/sizes via BFS on the row-column incidence
std::multiset<int> bfs_constituent_sizes(const RBColoring& coloring,
                                         const Partition& p) {
  const int rows = p.rows();
  const int cols = p.cols();
  std::vector<std::vector<int>> adj(rows + cols);
  for (const auto& [i, j] : coloring.red_boxes) {
    adj[i].push_back(rows + j);
    adj[rows + j].push_back(i);
  }
  std::vector<bool> seen(rows + cols, false);
  std::multiset<int> sizes;
  for (int start = 0; start < rows + cols; ++start) {
    if (seen[start] || adj[start].empty()) continue;
    int size = 0;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop();
      ++size;
      for (int next : adj[node]) {
        if (!seen[next]) {
          seen[next] = true;
          queue.push(next);
        }
      }
    }
    sizes.insert(size);
  }
  return sizes;
}

std::multiset<int> constituent_sizes(const Constitution& c) {
  std::multiset<int> sizes;
  for (const auto& part : c.constituents) sizes.insert(part.size());
  return sizes;
}

}  // namespace

TEST_SUITE_BEGIN("csf");

TEST_CASE("constitution examples on (2,2)") {
  const Partition p({2, 2});

  const Constitution blue = constitution(RBColoring{}, p);
  CHECK(blue.constituents.empty());
  CHECK(blue.blank_lines == 4);

  const Constitution diagonal =
      constitution(RBColoring{{{0, 0}, {1, 1}}}, p);
  CHECK(constituent_sizes(diagonal) == std::multiset<int>{2, 2});
  CHECK(diagonal.blank_lines == 0);

  const Constitution hook =
      constitution(RBColoring{{{0, 0}, {0, 1}, {1, 0}}}, p);
  CHECK(constituent_sizes(hook) == std::multiset<int>{4});
  CHECK(hook.blank_lines == 0);

  CHECK_THROWS_AS(constitution(RBColoring{{{1, 1}}}, Partition({2, 1})),
                  DomainError);
  CHECK_THROWS_AS(constitution(RBColoring{{{2, 0}}}, p), DomainError);
}

TEST_CASE("constitution conserves lines and matches a bfs recount") {
  std::mt19937 rng(4711);
  for (const Partition& p : all_partitions_up_to(10)) {
    std::vector<std::pair<int, int>> boxes;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.parts()[i]; ++j) boxes.emplace_back(i, j);
    for (int round = 0; round < 20; ++round) {
      RBColoring coloring;
      for (const auto& box : boxes)
        if (rng() & 1) coloring.red_boxes.push_back(box);
      const Constitution c = constitution(coloring, p);
      int line_total = c.blank_lines;
      for (const auto& part : c.constituents) line_total += part.size();
      CHECK(line_total == p.rows() + p.cols());
      CHECK(constituent_sizes(c) == bfs_constituent_sizes(coloring, p));
    }
  }
}

TEST_CASE("csf in the power-sum basis") {
  PBasisExpansion edge;  // X of a single edge
  edge.add({1, 1}, 1);
  edge.add({2}, -1);
  CHECK(csf_p_basis(FerrersGraph{Partition({1})}) == edge);

  PBasisExpansion path3;  // X of the 3-vertex path
  path3.add({1, 1, 1}, 1);
  path3.add({2, 1}, -2);
  path3.add({3}, 1);
  CHECK(csf_p_basis(FerrersGraph{Partition({2})}) == path3);

  CHECK_THROWS_AS(csf_p_basis(FerrersGraph{Partition({2, 2})}, 2),
                  ResourceError);
}

TEST_CASE("csf parallel sum equals sequential") {
  const FerrersGraph g{Partition({3, 2, 1})};
  CHECK(csf_p_basis(g, 24, 4) == csf_p_basis(g, 24, 1));
}

TEST_CASE("hook closed form") {
  CHECK(csf_hook_p_basis(0, 0) == csf_p_basis(FerrersGraph{Partition({1})}));
  CHECK(csf_hook_p_basis(2, 0) == csf_p_basis(FerrersGraph{Partition({3})}));
  CHECK(csf_hook_p_basis(1, 2) ==
        csf_p_basis(FerrersGraph{Partition({2, 1, 1})}));
}

TEST_CASE("csf is invariant under conjugation") {
  for (const Partition& p : all_partitions_up_to(8)) {
    CHECK(csf_p_basis(FerrersGraph{p}) ==
          csf_p_basis(FerrersGraph{p.conjugate()}));
  }
}

TEST_CASE("set partition enumeration") {
  CHECK(enumerate_set_partitions(0) ==
        std::vector<std::vector<int>>{std::vector<int>{}});
  CHECK(enumerate_set_partitions(1) ==
        std::vector<std::vector<int>>{std::vector<int>{0}});
  const auto bell3 = enumerate_set_partitions(3);
  CHECK(bell3.size() == 5);
  CHECK(bell3.front() == std::vector<int>{0, 0, 0});
  CHECK(bell3.back() == std::vector<int>{0, 1, 2});
  CHECK(enumerate_set_partitions(5).size() == 52);
}

TEST_CASE("complete bipartite csf in the monomial basis") {
  MBasisExpansion k11;  // X of K_{1,1}
  k11.add({1, 1}, 2);
  CHECK(csf_complete_bipartite_m_basis(1, 1) == k11);

  MBasisExpansion k12;  // X of K_{1,2}
  k12.add({1, 1, 1}, 6);
  k12.add({2, 1}, 1);
  CHECK(csf_complete_bipartite_m_basis(1, 2) == k12);

  CHECK(specialize_m(k11, std::vector<Rational>{1, 1}) == 2);
  CHECK_THROWS_AS(csf_complete_bipartite_m_basis(12, 12, 100),
                  ResourceError);
}

TEST_CASE("monomial expansion agrees with specialized csf") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> num(1, 6);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const MBasisExpansion mb = csf_complete_bipartite_m_basis(n, m);
      const Partition rect(std::vector<int>(n, m));
      const PBasisExpansion pb = csf_p_basis(FerrersGraph{rect});
      for (int round = 0; round < 3; ++round) {
        std::vector<Rational> point;
        for (int i = 0; i < n + m; ++i)
          point.emplace_back(num(rng), num(rng));
        CHECK(specialize_m(mb, point) == specialize_p(pb, point));
      }
    }
  }
}

TEST_CASE("specialization counts weighted proper colorings") {
  const std::vector<Rational> ones{1, 1, 1};
  for (const Partition& p : all_partitions_up_to(6)) {
    const FerrersGraph g{p};
    CHECK(specialize_p(csf_p_basis(g), ones) ==
          Rational(oracle::chromatic_value(g, 3)));
  }
}

TEST_CASE("egf coefficient check") {
  const std::vector<Rational> values{Rational(1), Rational(2)};
  CHECK(egf_coefficient_check(1, 1, values));
  CHECK(egf_coefficient_check(2, 2, values));
  CHECK(egf_coefficient_check(0, 2, values));  // edgeless
  CHECK(egf_coefficient_check(3, 0, std::vector<Rational>{Rational(1, 2)}));
  CHECK(egf_coefficient_check(0, 0, values));
}

TEST_SUITE_END();
