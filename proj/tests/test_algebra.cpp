#include <random>

#include "doctest.h"
#include "ferrers/errors.hpp"
#include "ferrers/expansion.hpp"
#include "ferrers/polynomial.hpp"
#include "ferrers/series.hpp"
#include "ferrers/weighted_sum.hpp"

using namespace ferrers;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial t = IntPolynomial::t();
  CHECK(IntPolynomial::linear(-1, 1) * t == IntPolynomial({0, -1, 1}));
  const IntPolynomial chi_ba({0, -3, 6, -4, 1});  // t^4-4t^3+6t^2-3t
  CHECK(chi_ba.coefficient(1) == -3);
  CHECK(chi_ba.coefficient(7) == 0);
  CHECK(IntPolynomial({0, -1, 1}).evaluate(3) == 6);
  CHECK(IntPolynomial().degree() == -1);
  CHECK((t - t).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int round = 0; round < 50; ++round) {
    std::vector<BigInt> fa, fb;
    for (int i = 0; i < 5; ++i) fa.emplace_back(coeff(rng));
    for (int i = 0; i < 4; ++i) fb.emplace_back(coeff(rng));
    const IntPolynomial f{fa}, g{fb};
    for (int k = -2; k <= 5; ++k) {
      CHECK((f * g).evaluate(k) == f.evaluate(k) * g.evaluate(k));
      CHECK((f + g).evaluate(k) == f.evaluate(k) + g.evaluate(k));
    }
  }
}

TEST_CASE("factored weighted sum evaluation") {
  // partition (1): Sigma = x_0 y_0
  FactoredWeightedSum single;
  single.multiply_variable(Variable::x(0));
  single.multiply_variable(Variable::y(0));
  Assignment a{{Variable::x(0), 5}, {Variable::y(0), 7}};
  CHECK(single.evaluate(a) == 35);

  // partition (2,2): x0 x1 y0 y1 (y0+y1)(x0+x1)
  FactoredWeightedSum square;
  for (int i = 0; i < 2; ++i) {
    square.multiply_variable(Variable::x(i));
    square.multiply_variable(Variable::y(i));
  }
  square.multiply_factor(LinearForm::prefix_y(2));
  square.multiply_factor(LinearForm::prefix_x(2));
  const Assignment b{{Variable::x(0), 1},
                     {Variable::x(1), 2},
                     {Variable::y(0), 1},
                     {Variable::y(1), 3}};
  CHECK(square.evaluate(b) == 72);

  Assignment missing{{Variable::x(0), 1}};
  CHECK_THROWS_AS(square.evaluate(missing), DomainError);
}

TEST_CASE("specialize_p") {
  PBasisExpansion e;  // p_1^2 - p_2
  e.add({1, 1}, 1);
  e.add({2}, -1);
  CHECK(specialize_p(e, std::vector<Rational>{1, 1}) == 2);
  CHECK(specialize_p(e, std::vector<Rational>{1, 1, 1}) == 6);

  PBasisExpansion path;  // p_1^3 - 2 p_2 p_1 + p_3
  path.add({1, 1, 1}, 1);
  path.add({2, 1}, -2);
  path.add({3}, 1);
  CHECK(specialize_p(path, std::vector<Rational>{1, 1}) == 2);
}

TEST_CASE("specialize_p is linear and multiplicative over parts") {
  const std::vector<Rational> point{Rational(2), Rational(1, 2), Rational(3)};
  PBasisExpansion a, b, sum;
  a.add({3, 1}, 5);
  b.add({2, 2}, -7);
  sum.add({3, 1}, 5);
  sum.add({2, 2}, -7);
  CHECK(specialize_p(sum, point) ==
        specialize_p(a, point) + specialize_p(b, point));
  PBasisExpansion product, p3, p1;
  product.add({3, 1}, 1);
  p3.add({3}, 1);
  p1.add({1}, 1);
  CHECK(specialize_p(product, point) ==
        specialize_p(p3, point) * specialize_p(p1, point));
}

TEST_CASE("specialize_m") {
  MBasisExpansion e;
  e.add({1, 1}, 2);
  CHECK(specialize_m(e, std::vector<Rational>{1, 1}) == 2);

  MBasisExpansion m21;
  m21.add({2, 1}, 1);
  CHECK(specialize_m(m21, std::vector<Rational>{1, 1}) == 2);  // x^2y + xy^2

  CHECK(specialize_m(m21, std::vector<Rational>{}) == 0);
  MBasisExpansion constant;
  constant.add({}, 3);
  CHECK(specialize_m(constant, std::vector<Rational>{}) == 3);
}

TEST_CASE("expansion canonicalization") {
  SymmetricExpansion e;
  e.add({1, 3, 2}, 4);
  e.add({3, 2, 1}, -4);
  CHECK(e.terms().empty());
  e.add({2, 1}, 1);
  CHECK(e.coefficient({1, 2}) == 1);
}

TEST_CASE("egf series product") {
  const std::vector<Rational> one_var{Rational(1)};
  const BivariateSeries a = series_product_egf(one_var, 2, 2);
  CHECK(a.coefficient(1, 1) == 0);  // e^s + e^t - 1 has no mixed terms

  const std::vector<Rational> two_vars{Rational(1), Rational(1)};
  const BivariateSeries b = series_product_egf(two_vars, 2, 2);
  CHECK(b.coefficient(1, 1) == 2);  // cross term of (e^s + e^t - 1)^2

  const BivariateSeries empty = series_product_egf({}, 3, 3);
  CHECK(empty.coefficient(0, 0) == 1);
  CHECK(empty.coefficient(2, 1) == 0);
}

TEST_SUITE_END();
