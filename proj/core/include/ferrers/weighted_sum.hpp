#ifndef FERRERS_WEIGHTED_SUM_HPP
#define FERRERS_WEIGHTED_SUM_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ferrers/bigint.hpp"

namespace ferrers {

/// One of the edge-weight variables x_0..x_n (rows) or y_0..y_m (columns).
struct Variable {
  enum class Kind { X, Y };
  Kind kind;
  int index;

  auto operator<=>(const Variable&) const = default;

  static Variable x(int i) { return {Kind::X, i}; }
  static Variable y(int j) { return {Kind::Y, j}; }
  std::string str() const;
};

using Assignment = std::map<Variable, Rational>;

/// Sum of distinct variables, e.g. y_0 + y_1 + y_2.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Variable> vars);

  /// x_0 + ... + x_{count-1}
  static LinearForm prefix_x(int count);
  /// y_0 + ... + y_{count-1}
  static LinearForm prefix_y(int count);

  const std::vector<Variable>& variables() const { return vars_; }
  Rational evaluate(const Assignment& assignment) const;
  std::string str() const;

  bool operator==(const LinearForm&) const = default;

 private:
  std::vector<Variable> vars_;  // sorted, distinct, non-empty
};

/// Product of a monomial in the variables and a list of linear forms.
/// Holds the factored spanning-tree generating function; equality of two
/// such objects is tested by evaluation, never by expansion.
class FactoredWeightedSum {
 public:
  FactoredWeightedSum() = default;

  void multiply_variable(Variable v, int exponent = 1);
  void multiply_factor(LinearForm form);

  const std::map<Variable, int>& monomial_exponents() const {
    return exponents_;
  }
  const std::vector<LinearForm>& factors() const { return factors_; }

  /// Exact value; throws DomainError if a variable is unassigned.
  Rational evaluate(const Assignment& assignment) const;

  std::string str() const;

 private:
  std::map<Variable, int> exponents_;
  std::vector<LinearForm> factors_;
};

}  // namespace ferrers

#endif
