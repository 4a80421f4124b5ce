#include "ferrers/polynomial.hpp"

#include <sstream>

namespace ferrers {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  return IntPolynomial({std::move(c)});
}

IntPolynomial IntPolynomial::t() { return IntPolynomial({0, 1}); }

IntPolynomial IntPolynomial::linear(BigInt c0, BigInt c1) {
  return IntPolynomial({std::move(c0), std::move(c1)});
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt result = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * x + *it;
  }
  return result;
}

IntPolynomial IntPolynomial::pow(unsigned exp) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> product(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(product));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    const BigInt abs = boost::multiprecision::abs(c);
    if (abs != 1 || k == 0) out << abs.str();
    if (k > 0) {
      if (abs != 1) out << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace ferrers
