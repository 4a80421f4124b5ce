#include "ferrers/json_io.hpp"

namespace ferrers {

nlohmann::json partition_to_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

nlohmann::json polynomial_to_json(const IntPolynomial& poly) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : poly.coefficients()) coeffs.push_back(c.str());
  return coeffs;
}

nlohmann::json expansion_to_json(const SymmetricExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mu, c] : e.terms()) {
    terms.push_back({{"partition", mu}, {"coeff", c.str()}});
  }
  return terms;
}

}  // namespace ferrers
