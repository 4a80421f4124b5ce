#include <numeric>

#include "doctest.h"
#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/selftest.hpp"

using namespace ferrers;

TEST_SUITE_BEGIN("core");

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("4,4,2").parts() == std::vector<int>{4, 4, 2});
  CHECK(Partition::parse("1").parts() == std::vector<int>{1});
  CHECK(Partition::parse(" 3, 2 ").parts() == std::vector<int>{3, 2});
  CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);   // not decreasing
  CHECK_THROWS_AS(Partition::parse("2,0"), ParseError);   // zero part
  CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
  CHECK_THROWS_AS(Partition::parse(""), ParseError);
}

TEST_CASE("conjugate") {
  CHECK(Partition::parse("4,4,2").conjugate() == Partition({3, 3, 2, 2}));
  CHECK(Partition({1}).conjugate() == Partition({1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("conjugate is an involution") {
  for (const Partition& p : all_partitions_up_to(12)) {
    CHECK(p.conjugate().conjugate() == p);
  }
  const Partition big({9, 7, 7, 4, 2, 1, 1});
  CHECK(big.conjugate().conjugate() == big);
}

TEST_CASE("word to partition") {
  CHECK(ABWord::parse("babba").to_partition() == Partition({4, 4, 2}));
  CHECK(ABWord::parse("").to_partition() == Partition({1}));
  CHECK(ABWord::parse("ba").to_partition() == Partition({2, 2}));
  CHECK_THROWS_AS(ABWord::parse("bac"), ParseError);
}

TEST_CASE("partition to word") {
  CHECK(ABWord::from_partition(Partition({4, 4, 2})).str() == "babba");
  CHECK(ABWord::from_partition(Partition({1})).str() == "");
  CHECK(ABWord::from_partition(Partition({2, 2})).str() == "ba");
}

TEST_CASE("word round trip is the identity, exhaustively") {
  for (const ABWord& w : all_words_up_to(10)) {
    CHECK(ABWord::from_partition(w.to_partition()) == w);
  }
  for (const Partition& p : all_partitions_up_to(10)) {
    CHECK(ABWord::from_partition(p).to_partition() == p);
  }
}

TEST_CASE("graph structure") {
  const FerrersGraph g{Partition({4, 4, 2})};
  CHECK(g.row_count() == 3);
  CHECK(g.col_count() == 4);
  CHECK(g.edge_count() == 10);
  const FerrersGraph single{Partition({1})};
  CHECK(single.vertex_count() == 2);
  CHECK(single.edge(0, 0));
  const FerrersGraph square{Partition({2, 2})};
  CHECK(square.edge_count() == 4);  // K_{2,2}
}

TEST_CASE("graph invariants on every small shape") {
  for (const Partition& p : all_partitions_up_to(10)) {
    const FerrersGraph g{p};
    const auto dual = p.conjugate().parts();
    // degree sums both equal the box count
    CHECK(std::accumulate(dual.begin(), dual.end(), 0LL) == p.boxes());
    // corner edges
    CHECK(g.edge(0, g.col_count() - 1));
    CHECK(g.edge(g.row_count() - 1, 0));
    // downward closure
    for (int i = 0; i < g.row_count(); ++i) {
      for (int j = 0; j < g.col_count(); ++j) {
        if (g.edge(i, j)) {
          CHECK((i == 0 || g.edge(i - 1, j)));
          CHECK((j == 0 || g.edge(i, j - 1)));
        }
      }
    }
  }
}

TEST_SUITE_END();
