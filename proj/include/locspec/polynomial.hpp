#pragma once

#include <span>
#include <vector>

namespace locspec {

/// Dense univariate polynomial with real coefficients in ascending degree
/// order.  Trailing coefficients below the trim tolerance are dropped so
/// degree() reflects the numerically meaningful degree.
class Polynomial {
 public:
  static constexpr double kDefaultTolCoef = 1e-10;

  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs,
                      double tol_coef = kDefaultTolCoef);

  static Polynomial constant(double c) { return Polynomial({c}, 0.0); }
  static Polynomial monomial_x() { return Polynomial({0.0, 1.0}, 0.0); }

  /// Unique polynomial of degree <= nodes.size()-1 through the given points.
  /// Newton divided differences; nodes must be pairwise distinct.
  static Polynomial interpolate(std::span<const double> nodes,
                                std::span<const double> values);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  double leading() const { return coeffs_.back(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Horner evaluation.
  double operator()(double x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);

  /// p(x) * (x - root), exact in coefficient arithmetic.
  Polynomial times_linear(double root) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, double s) {
    a *= s;
    return a;
  }
  friend Polynomial operator*(double s, Polynomial a) {
    a *= s;
    return a;
  }

 private:
  std::vector<double> coeffs_;
  void trim(double tol);
};

}  // namespace locspec
