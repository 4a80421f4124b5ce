#include "ferrers/bigint.hpp"

#include "ferrers/errors.hpp"

namespace ferrers {

BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

Rational rat_pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("invalid rational '" + text + "': " + e.what());
  }
}

}  // namespace ferrers
