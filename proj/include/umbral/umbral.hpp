#pragma once

// Umbral algebra restricted to Appell sources: formal power series act on
// polynomials both as linear functionals <f(t) | p(x)> and as operators
// f(t) p(x), and an invertible series g(t) determines the Appell sequence
// s_n(x) with generating function e^{xt} / g(t).

#include <cstddef>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// <f(t) | p(x)> = sum_n p_n * n! * [t^n] f.
/// Throws CapExhaustedError if cap(f) < deg p.
Rational functional_apply(const TruncatedSeries& f, const Polynomial& p);

/// f(t) p(x) = sum_k [t^k] f * p^{(k)}(x).
Polynomial operator_apply(const TruncatedSeries& f, const Polynomial& p);

/// p(x + y), by binomial re-expansion.
Polynomial shift(const Polynomial& p, const Rational& y);

/// Invertible series g(t) of an Appell sequence s_n ~ (g(t), t).
struct AppellDescriptor {
  TruncatedSeries g;
  std::string label;

  /// Throws InvalidParamsError unless g(0) != 0.
  AppellDescriptor(TruncatedSeries g, std::string label);
};

/// Target basis r_n ~ (h(t), l(t)) for connection coefficients.
struct ShefferTarget {
  TruncatedSeries h;
  TruncatedSeries l;
  std::string label;

  /// Throws InvalidParamsError unless h(0) != 0, l(0) = 0 and l'(0) != 0.
  ShefferTarget(TruncatedSeries h, TruncatedSeries l, std::string label);
};

/// An Appell sequence held through its generating series G(t) = 1/g(t),
/// so that s_n(x) = sum_j C(n,j) m_{n-j} x^j with m_i = i! [t^i] G.
class AppellSequence {
 public:
  explicit AppellSequence(const AppellDescriptor& d);
  /// Builds the sequence straight from the generating series 1/g(t).
  static AppellSequence from_generating(TruncatedSeries generating, std::string label);

  const TruncatedSeries& generating() const { return generating_; }
  const std::string& label() const { return label_; }
  std::size_t cap() const { return generating_.cap(); }

  /// s_n(0) = n! [t^n] G.
  const Rational& number(std::size_t n) const;
  Polynomial polynomial(std::size_t n) const;

 private:
  AppellSequence(TruncatedSeries generating, std::string label);

  TruncatedSeries generating_;
  std::string label_;
  std::vector<Rational> moments_;
};

/// s_n(x) for the Appell sequence of d. Throws CapExhaustedError if cap(g) < n.
Polynomial appell_polynomial(const AppellDescriptor& d, std::size_t n);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rows 0..n of C with s_i(x) = sum_m C[i][m] r_m(x), where s_i ~ (source_g, t)
/// and r_m ~ (target.h, target.l):  C[i][m] = <(h/g) l^m | x^i> / m!.
RationalMatrix connection_coefficients(const TruncatedSeries& source_g, const ShefferTarget& target,
                                       std::size_t n);

}  // namespace umbral
