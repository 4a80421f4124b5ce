#include "ferrers/expansion.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ferrers/errors.hpp"

namespace ferrers {

void SymmetricExpansion::add(PartitionKey mu, const BigInt& c) {
  if (c == 0) return;
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  for (int part : mu) {
    if (part < 1) throw DomainError("partition key part must be >= 1");
  }
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mu), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SymmetricExpansion::coefficient(PartitionKey mu) const {
  std::sort(mu.begin(), mu.end(), std::greater<int>());
  auto it = terms_.find(mu);
  return it == terms_.end() ? BigInt(0) : it->second;
}

SymmetricExpansion& SymmetricExpansion::operator+=(
    const SymmetricExpansion& rhs) {
  for (const auto& [mu, c] : rhs.terms_) add(mu, c);
  return *this;
}

std::string SymmetricExpansion::str(const std::string& basis_symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    const BigInt abs = boost::multiprecision::abs(c);
    if (abs != 1 || mu.empty()) out << abs.str();
    if (!mu.empty()) {
      if (abs != 1) out << "*";
      out << basis_symbol << "[";
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i > 0) out << ",";
        out << mu[i];
      }
      out << "]";
    }
  }
  return out.str();
}

Rational specialize_p(const PBasisExpansion& e,
                      std::span<const Rational> values) {
  // power sums p_r(values), computed on demand
  std::vector<Rational> power_sums{Rational(values.size())};  // p_0 unused
  auto power_sum = [&](int r) -> const Rational& {
    while (static_cast<int>(power_sums.size()) <= r) {
      const int k = static_cast<int>(power_sums.size());
      Rational s = 0;
      for (const Rational& v : values) s += rat_pow(v, k);
      power_sums.push_back(std::move(s));
    }
    return power_sums[r];
  };
  Rational total = 0;
  for (const auto& [mu, c] : e.terms()) {
    Rational term = Rational(c);
    for (int part : mu) term *= power_sum(part);
    total += term;
  }
  return total;
}

Rational monomial_symmetric_value(const PartitionKey& mu,
                                  std::span<const Rational> values) {
  if (mu.empty()) return 1;
  const int k = static_cast<int>(values.size());
  if (static_cast<int>(mu.size()) > k) return 0;
  // Sum over injective placements of the parts onto variables, then divide
  // by the multiplicity factorials to count each distinct monomial once.
  Rational total = 0;
  std::vector<bool> used(k, false);
  std::function<void(std::size_t, Rational)> place =
      [&](std::size_t pos, Rational prod) {
        if (pos == mu.size()) {
          total += prod;
          return;
        }
        for (int i = 0; i < k; ++i) {
          if (used[i]) continue;
          used[i] = true;
          place(pos + 1,
                prod * rat_pow(values[i], static_cast<unsigned>(mu[pos])));
          used[i] = false;
        }
      };
  place(0, 1);
  BigInt repeats = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    repeats *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return total / Rational(repeats);
}

Rational specialize_m(const MBasisExpansion& e,
                      std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& [mu, c] : e.terms()) {
    total += Rational(c) * monomial_symmetric_value(mu, values);
  }
  return total;
}

}  // namespace ferrers
