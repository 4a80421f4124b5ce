#include "doctest.h"
#include "ferrers/chromatic.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/selftest.hpp"

using namespace ferrers;

TEST_SUITE_BEGIN("chromatic");

TEST_CASE("r-vector enumeration") {
  CHECK(enumerate_r_vectors(0) == std::vector<RVector>{RVector{{1}}});
  CHECK(enumerate_r_vectors(1) ==
        std::vector<RVector>{RVector{{1, 1}}, RVector{{1, 2}}});
  const auto r2 = enumerate_r_vectors(2);
  CHECK(r2.size() == 4);
  CHECK(r2.front() == RVector{{1, 1, 1}});
  CHECK(r2.back() == RVector{{1, 2, 3}});
  for (const RVector& r : enumerate_r_vectors(5)) {
    CHECK(r.entries.front() == 1);
    for (std::size_t i = 0; i + 1 < r.entries.size(); ++i) {
      const int step = r.entries[i + 1] - r.entries[i];
      CHECK((step == 0 || step == 1));
    }
  }
}

TEST_CASE("h statistic") {
  CHECK(h_statistic(RVector{{1}}) == 0);
  CHECK(h_statistic(RVector{{1, 1}}) == 1);
  CHECK(h_statistic(RVector{{1, 2, 2, 3}}) == 1);
}

TEST_CASE("excedance statistic") {
  CHECK(excedance_statistic(ABWord::parse("")) == 1);
  CHECK(excedance_statistic(ABWord::parse("ab")) == 1);
  CHECK(excedance_statistic(ABWord::parse("ba")) == 3);
  CHECK(excedance_statistic(ABWord::parse("a")) == 1);
  CHECK(excedance_statistic(ABWord::parse("b")) == 1);
}

TEST_CASE("chromatic polynomial") {
  const IntPolynomial t = IntPolynomial::t();
  const IntPolynomial t_minus_1 = IntPolynomial::linear(-1, 1);
  CHECK(chromatic_polynomial(ABWord::parse("")) == t * t_minus_1);
  CHECK(chromatic_polynomial(ABWord::parse("a")) ==
        t * t_minus_1 * t_minus_1);
  CHECK(chromatic_polynomial(ABWord::parse("ba")) ==
        IntPolynomial({0, -3, 6, -4, 1}));
}

TEST_CASE("chromatic polynomial shape") {
  for (const ABWord& w : all_words_up_to(6)) {
    const IntPolynomial chi = chromatic_polynomial(w);
    CHECK(chi.degree() == w.length() + 2);  // vertex count
    CHECK(chi.coefficient(chi.degree()) == 1);
    CHECK(chi.coefficient(0) == 0);
  }
}

TEST_CASE("appending a or b multiplies by t-1") {
  const IntPolynomial t_minus_1 = IntPolynomial::linear(-1, 1);
  for (const ABWord& w : all_words_up_to(8)) {
    const IntPolynomial chi = chromatic_polynomial(w);
    CHECK(chromatic_polynomial(ABWord::parse("a" + w.str())) ==
          t_minus_1 * chi);
    CHECK(chromatic_polynomial(ABWord::parse(w.str() + "b")) ==
          t_minus_1 * chi);
  }
}

TEST_CASE("transpose reduction agrees with the direct sum") {
  for (const ABWord& w : all_words_up_to(7)) {
    CHECK(chromatic_polynomial(w) == chromatic_polynomial_direct(w));
  }
}

TEST_CASE("parallel sum equals sequential") {
  const ABWord w = ABWord::parse("babbaabbab");
  CHECK(chromatic_polynomial(w, 4) == chromatic_polynomial(w, 1));
  CHECK(chromatic_polynomial_direct(w, 3) == chromatic_polynomial_direct(w));
}

TEST_CASE("stirling numbers") {
  CHECK(stirling2(2, 1) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK_THROWS_AS(stirling2(2, 3), DomainError);
  CHECK_THROWS_AS(stirling2(-1, 0), DomainError);
}

TEST_CASE("complete bipartite chromatic polynomial") {
  CHECK(chromatic_complete_bipartite(1, 1) == IntPolynomial({0, -3, 6, -4, 1}));
  CHECK(chromatic_complete_bipartite(0, 0) == IntPolynomial({0, -1, 1}));
  CHECK(chromatic_complete_bipartite(1, 0) ==
        IntPolynomial::t() * IntPolynomial::linear(-1, 1).pow(2));
}

TEST_CASE("linear coefficient statistic") {
  CHECK(linear_coefficient_statistic(ABWord::parse("ba")) == 3);
  CHECK(linear_coefficient_statistic(ABWord::parse("")) == 1);
  CHECK(linear_coefficient_statistic(ABWord::parse("ab")) == 1);
}

TEST_CASE("recursion checks") {
  CHECK(chromatic_recursion_check(ABWord::parse(""), 1));
  CHECK(chromatic_recursion_check(ABWord::parse("b"), 2));
  CHECK(chromatic_recursion_check(ABWord::parse("ab"), 3));
  CHECK(excedance_recursion_check(ABWord::parse(""), ABWord::parse("")));
  CHECK(excedance_recursion_check(ABWord::parse("a"), ABWord::parse("")));
  CHECK(excedance_recursion_check(ABWord::parse(""), ABWord::parse("b")));
}

TEST_SUITE_END();
