#include "locspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace locspec {

Polynomial::Polynomial(std::vector<double> coeffs, double tol_coef)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim(tol_coef);
}

void Polynomial::trim(double tol) {
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= tol)
    coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  trim(0.0);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  trim(0.0);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim(0.0);
  return *this;
}

Polynomial Polynomial::times_linear(double root) const {
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] += coeffs_[i];
    out[i] -= root * coeffs_[i];
  }
  return Polynomial(std::move(out), 0.0);
}

Polynomial Polynomial::interpolate(std::span<const double> nodes,
                                   std::span<const double> values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("interpolate: node/value size mismatch");
  const std::size_t n = nodes.size();

  // Divided-difference table, in place.
  std::vector<double> dd(values.begin(), values.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);

  // Expand the Newton form back to monomial coefficients.
  Polynomial result = Polynomial::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result.times_linear(nodes[i]);
    result += Polynomial::constant(dd[i]);
  }
  return result;
}

}  // namespace locspec
