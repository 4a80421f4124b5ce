#ifndef FERRERS_POLYNOMIAL_HPP
#define FERRERS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// Dense univariate polynomial in t with exact integer coefficients.
/// Coefficient k is the coefficient of t^k; the highest stored coefficient
/// is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial t();
  /// c0 + c1 * t
  static IntPolynomial linear(BigInt c0, BigInt c1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Zero if k is out of range.
  BigInt coefficient(int k) const;

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial pow(unsigned exp) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);

  bool operator==(const IntPolynomial&) const = default;

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  std::string str() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace ferrers

#endif
