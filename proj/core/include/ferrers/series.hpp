#ifndef FERRERS_SERIES_HPP
#define FERRERS_SERIES_HPP

#include <span>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// Bivariate power series in s and t, truncated to s^i t^j with
/// i <= max_order_s, j <= max_order_t. Coefficients are exact rationals;
/// multiplication truncates to the same orders.
class BivariateSeries {
 public:
  BivariateSeries(int max_order_s, int max_order_t);

  static BivariateSeries one(int max_order_s, int max_order_t);

  int max_order_s() const { return max_s_; }
  int max_order_t() const { return max_t_; }

  const Rational& coefficient(int i, int j) const {
    return coeffs_[index(i, j)];
  }
  void set_coefficient(int i, int j, Rational value) {
    coeffs_[index(i, j)] = std::move(value);
  }

  BivariateSeries operator*(const BivariateSeries& rhs) const;

 private:
  std::size_t index(int i, int j) const;
  int max_s_;
  int max_t_;
  std::vector<Rational> coeffs_;
};

/// Truncated product over the given variable values x of
/// (e^{s x} + e^{t x} - 1).
BivariateSeries series_product_egf(std::span<const Rational> var_values,
                                   int max_order_s, int max_order_t);

}  // namespace ferrers

#endif
