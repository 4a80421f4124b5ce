#ifndef FERRERS_EXPANSION_HPP
#define FERRERS_EXPANSION_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// Canonical partition key: parts sorted descending, all >= 1. The empty
/// key is the constant term.
using PartitionKey = std::vector<int>;

/// Integer linear combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
class SymmetricExpansion {
 public:
  SymmetricExpansion() = default;

  /// Adds c times the basis element for mu; mu is canonicalized first.
  void add(PartitionKey mu, const BigInt& c);

  const std::map<PartitionKey, BigInt>& terms() const { return terms_; }
  BigInt coefficient(PartitionKey mu) const;
  bool operator==(const SymmetricExpansion&) const = default;

  SymmetricExpansion& operator+=(const SymmetricExpansion& rhs);

  std::string str(const std::string& basis_symbol) const;

 private:
  std::map<PartitionKey, BigInt> terms_;
};

using PBasisExpansion = SymmetricExpansion;
using MBasisExpansion = SymmetricExpansion;

/// Substitutes p_r -> values_1^r + ... + values_k^r and evaluates.
Rational specialize_p(const PBasisExpansion& e,
                      std::span<const Rational> values);

/// Substitutes each m_mu by its monomial-symmetric evaluation at the
/// finite point (values_1, ..., values_k) and evaluates.
Rational specialize_m(const MBasisExpansion& e,
                      std::span<const Rational> values);

/// m_mu(values): sum of all distinct monomials with exponent multiset mu.
Rational monomial_symmetric_value(const PartitionKey& mu,
                                  std::span<const Rational> values);

}  // namespace ferrers

#endif
