#ifndef FERRERS_BIGINT_HPP
#define FERRERS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ferrers {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, unsigned exp);
Rational rat_pow(const Rational& base, unsigned exp);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Parses "p", "-p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace ferrers

#endif
