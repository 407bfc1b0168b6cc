#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Formal power series in t over the rationals, truncated after t^cap.
///
/// Every coefficient up to and including t^cap is known exactly; nothing is
/// known about the tail. Binary operations therefore return results whose cap
/// is the smaller of the operand caps, and division or differentiation lose
/// further degrees.
class TruncatedSeries {
 public:
  /// The zero series with the given cap.
  explicit TruncatedSeries(std::size_t cap);
  /// Coefficients c[0..], padded with zeros or cut to length cap + 1.
  TruncatedSeries(std::size_t cap, std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t cap);
  /// c * t^k (zero if k > cap).
  static TruncatedSeries monomial(std::size_t k, std::size_t cap, const Rational& c = 1);

  std::size_t cap() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of t^i, or zero beyond the cap.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Smallest i with a nonzero coefficient; nullopt when zero up to the cap.
  std::optional<std::size_t> order() const;
  bool is_zero_to_cap() const { return !order().has_value(); }

  /// Same series with fewer retained coefficients. Requires new_cap <= cap().
  TruncatedSeries truncated(std::size_t new_cap) const;
  /// Copy with coefficient i replaced.
  TruncatedSeries with_coeff(std::size_t i, Rational value) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

  /// Equal when all coefficients agree up to the smaller cap.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// s^e by repeated multiplication; s^0 is 1 at the cap of s.
TruncatedSeries power(const TruncatedSeries& s, unsigned e);

/// Quotient a / b for series where b may vanish to some order m.
///
/// Both operands are first divided by t^m, then the unit-divisor triangular
/// system is solved. The result has cap min(cap a, cap b) - m.
/// Throws ZeroDivisorError if b is zero to its cap and DivisionOrderError if
/// a vanishes to lower order than b.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

/// f(g(t)) for a delta (or higher order) series g. Throws NotDeltaError if g(0) != 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// e^{a t} = sum a^i t^i / i!.
TruncatedSeries exp_scaled(const Rational& a, std::size_t cap);

/// Formal d/dt; cap drops by one. Throws CapExhaustedError at cap 0.
TruncatedSeries derivative_t(const TruncatedSeries& s);

}  // namespace umbral
