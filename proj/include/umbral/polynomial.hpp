#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial in x with rational coefficients.
/// Trailing zeros are always trimmed, so equal polynomials compare equal.
class Polynomial {
 public:
  Polynomial() = default;
  /// coeffs[j] is the coefficient of x^j.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  /// x - c
  static Polynomial linear_root(const Rational& c);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t j) const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace umbral
