#include "ferrers/weighted_sum.hpp"

#include <algorithm>
#include <sstream>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

Rational lookup(const Assignment& assignment, const Variable& v) {
  auto it = assignment.find(v);
  if (it == assignment.end()) {
    throw DomainError("assignment is missing variable " + v.str());
  }
  return it->second;
}

}  // namespace

std::string Variable::str() const {
  return (kind == Kind::X ? "x" : "y") + std::to_string(index);
}

LinearForm::LinearForm(std::vector<Variable> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw DomainError("empty linear form");
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    throw DomainError("repeated variable in linear form");
  }
}

LinearForm LinearForm::prefix_x(int count) {
  std::vector<Variable> vars;
  for (int i = 0; i < count; ++i) vars.push_back(Variable::x(i));
  return LinearForm(std::move(vars));
}

LinearForm LinearForm::prefix_y(int count) {
  std::vector<Variable> vars;
  for (int j = 0; j < count; ++j) vars.push_back(Variable::y(j));
  return LinearForm(std::move(vars));
}

Rational LinearForm::evaluate(const Assignment& assignment) const {
  Rational sum = 0;
  for (const Variable& v : vars_) sum += lookup(assignment, v);
  return sum;
}

std::string LinearForm::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i > 0) out << "+";
    out << vars_[i].str();
  }
  out << ")";
  return out.str();
}

void FactoredWeightedSum::multiply_variable(Variable v, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent > 0) exponents_[v] += exponent;
}

void FactoredWeightedSum::multiply_factor(LinearForm form) {
  factors_.push_back(std::move(form));
}

Rational FactoredWeightedSum::evaluate(const Assignment& assignment) const {
  Rational product = 1;
  for (const auto& [v, exp] : exponents_) {
    product *= rat_pow(lookup(assignment, v), static_cast<unsigned>(exp));
  }
  for (const LinearForm& form : factors_) {
    product *= form.evaluate(assignment);
  }
  return product;
}

std::string FactoredWeightedSum::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, exp] : exponents_) {
    if (!first) out << "*";
    first = false;
    out << v.str();
    if (exp > 1) out << "^" << exp;
  }
  for (const LinearForm& form : factors_) {
    if (!first) out << "*";
    first = false;
    out << form.str();
  }
  if (first) out << "1";
  return out.str();
}

}  // namespace ferrers
