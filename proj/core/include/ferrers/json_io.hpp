#ifndef FERRERS_JSON_IO_HPP
#define FERRERS_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "ferrers/expansion.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/polynomial.hpp"

namespace ferrers {

// Big integers are rendered as decimal strings so JSON consumers never
// lose precision.

nlohmann::json partition_to_json(const Partition& p);

/// Coefficient array, ascending powers, decimal strings.
nlohmann::json polynomial_to_json(const IntPolynomial& poly);

/// List of {"partition": [ints], "coeff": "decimal"}.
nlohmann::json expansion_to_json(const SymmetricExpansion& e);

}  // namespace ferrers

#endif
