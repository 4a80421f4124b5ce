#include "ferrers/series.hpp"

#include "ferrers/errors.hpp"

namespace ferrers {

BivariateSeries::BivariateSeries(int max_order_s, int max_order_t)
    : max_s_(max_order_s),
      max_t_(max_order_t),
      coeffs_(static_cast<std::size_t>(max_order_s + 1) * (max_order_t + 1),
              Rational(0)) {
  if (max_order_s < 0 || max_order_t < 0) {
    throw DomainError("negative truncation order");
  }
}

BivariateSeries BivariateSeries::one(int max_order_s, int max_order_t) {
  BivariateSeries series(max_order_s, max_order_t);
  series.set_coefficient(0, 0, 1);
  return series;
}

std::size_t BivariateSeries::index(int i, int j) const {
  if (i < 0 || i > max_s_ || j < 0 || j > max_t_) {
    throw DomainError("series coefficient index out of range");
  }
  return static_cast<std::size_t>(i) * (max_t_ + 1) + j;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  if (max_s_ != rhs.max_s_ || max_t_ != rhs.max_t_) {
    throw DomainError("series truncation orders differ");
  }
  BivariateSeries product(max_s_, max_t_);
  for (int i = 0; i <= max_s_; ++i) {
    for (int j = 0; j <= max_t_; ++j) {
      const Rational& c = coefficient(i, j);
      if (c == 0) continue;
      for (int p = 0; i + p <= max_s_; ++p) {
        for (int q = 0; j + q <= max_t_; ++q) {
          const Rational& d = rhs.coefficient(p, q);
          if (d == 0) continue;
          product.coeffs_[product.index(i + p, j + q)] += c * d;
        }
      }
    }
  }
  return product;
}

BivariateSeries series_product_egf(std::span<const Rational> var_values,
                                   int max_order_s, int max_order_t) {
  BivariateSeries product = BivariateSeries::one(max_order_s, max_order_t);
  for (const Rational& x : var_values) {
    // e^{s x} + e^{t x} - 1: pure powers of s and t, no mixed terms
    BivariateSeries factor(max_order_s, max_order_t);
    factor.set_coefficient(0, 0, 1);
    Rational power = 1;
    BigInt fact = 1;
    for (int i = 1; i <= std::max(max_order_s, max_order_t); ++i) {
      power *= x;
      fact *= i;
      const Rational coeff = power / Rational(fact);
      if (i <= max_order_s) factor.set_coefficient(i, 0, coeff);
      if (i <= max_order_t) factor.set_coefficient(0, i, coeff);
    }
    product = product * factor;
  }
  return product;
}

}  // namespace ferrers
