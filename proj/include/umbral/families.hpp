#pragma once

// Polynomial and number families built on the Appell machinery.
//
// Kernel conventions (every family is Appell, s_n ~ (g(t), t)):
//   poly-Bernoulli      g_k(t)     = (1 - e^{-t}) / Li_k(1 - e^{-t})
//   Barnes multiple     g_r(t)     = prod_j (e^{a_j t} - 1) / t^r
//   mixed type          g_{r,k}(t) = g_r(t) g_k(t)
//   Frobenius-Euler     ((e^t - lambda) / (1 - lambda))^s
//   higher Bernoulli    ((e^t - 1) / t)^s

#include <cstddef>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"
#include "umbral/umbral.hpp"

namespace umbral {

/// Extra series degrees requested beyond the output degree.
inline constexpr std::size_t kCapGuard = 2;

/// Barnes parameters a_1..a_r, r >= 1, every a_j nonzero.
class BarnesParams {
 public:
  /// Throws InvalidParamsError if a is empty or contains a zero.
  explicit BarnesParams(std::vector<Rational> a);

  std::size_t r() const { return a_.size(); }
  const std::vector<Rational>& a() const { return a_; }
  /// (a_1, ..., a_r, extra)
  BarnesParams appended(const Rational& extra) const;
  Rational product() const;
  std::string to_string() const;

  friend bool operator==(const BarnesParams&, const BarnesParams&) = default;

 private:
  std::vector<Rational> a_;
};

/// Index (r, k, a_1..a_r) of the mixed-type family S_n^{(r,k)}(x | a).
struct MixedFamilyKey {
  BarnesParams params;
  long k = 0;

  std::size_t r() const { return params.r(); }
  friend bool operator==(const MixedFamilyKey&, const MixedFamilyKey&) = default;
};

/// B_0..B_N with t/(e^t - 1) = sum B_n t^n / n!, so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(std::size_t N);

/// Stirling number of the second kind by the triangle recurrence.
Integer stirling2(std::size_t l, std::size_t m);
/// Rows 0..rows of the triangle; row l has entries m = 0..l.
std::vector<std::vector<Integer>> stirling2_table(std::size_t rows);

/// sum_{m=1}^{cap} u^m / m^k as a series in u.
TruncatedSeries polylog_in_u(long k, std::size_t cap);
/// 1 - e^{-t}
TruncatedSeries one_minus_exp_neg(std::size_t cap);
/// Li_k(1 - e^{-t}), order exactly 1.
TruncatedSeries polylog_series(long k, std::size_t cap);

/// Li_k(1 - e^{-t}) / (1 - e^{-t}), the poly-Bernoulli generating kernel.
TruncatedSeries poly_bernoulli_kernel(long k, std::size_t cap);
/// t^r / prod_j (e^{a_j t} - 1), the Barnes generating kernel.
TruncatedSeries barnes_kernel(const BarnesParams& p, std::size_t cap);

AppellDescriptor poly_bernoulli_descriptor(long k, std::size_t cap);
AppellDescriptor barnes_descriptor(const BarnesParams& p, std::size_t cap);
AppellDescriptor mixed_descriptor(const MixedFamilyKey& key, std::size_t cap);
/// Throws InvalidParamsError if lambda = 1.
AppellDescriptor frobenius_euler_descriptor(std::size_t s, const Rational& lambda, std::size_t cap);
AppellDescriptor higher_bernoulli_descriptor(std::size_t s, std::size_t cap);

Polynomial poly_bernoulli_poly(std::size_t n, long k);
Polynomial barnes_bernoulli_poly(std::size_t n, const BarnesParams& p);
Polynomial mixed_poly(std::size_t n, const MixedFamilyKey& key);
Polynomial frobenius_euler_poly(std::size_t n, std::size_t s, const Rational& lambda);
Polynomial higher_bernoulli_poly(std::size_t n, std::size_t s);

/// x(x-1)...(x-m+1)
Polynomial falling_factorial(std::size_t m);
/// x(x+1)...(x+m-1)
Polynomial rising_factorial(std::size_t m);

}  // namespace umbral
