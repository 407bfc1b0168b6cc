#include "umbral/families.hpp"

#include "umbral/errors.hpp"

namespace umbral {

BarnesParams::BarnesParams(std::vector<Rational> a) : a_(std::move(a)) {
  if (a_.empty()) throw InvalidParamsError("Barnes parameters need r >= 1");
  for (const auto& x : a_) {
    if (x == 0) throw InvalidParamsError("Barnes parameters must be nonzero");
  }
}

BarnesParams BarnesParams::appended(const Rational& extra) const {
  auto a = a_;
  a.push_back(extra);
  return BarnesParams(std::move(a));
}

Rational BarnesParams::product() const {
  Rational p = 1;
  for (const auto& x : a_) p *= x;
  return p;
}

std::string BarnesParams::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += umbral::to_string(a_[i]);
  }
  return s;
}

std::vector<Rational> bernoulli_numbers(std::size_t N) {
  const TruncatedSeries t = TruncatedSeries::monomial(1, N + 1);
  const TruncatedSeries q = divide(t, exp_scaled(1, N + 1) - TruncatedSeries::constant(1, N + 1));
  std::vector<Rational> b(N + 1);
  Integer fact = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    b[n] = q[n] * fact;
  }
  return b;
}

std::vector<std::vector<Integer>> stirling2_table(std::size_t rows) {
  std::vector<std::vector<Integer>> s(rows + 1);
  s[0] = {1};
  for (std::size_t l = 1; l <= rows; ++l) {
    s[l].assign(l + 1, 0);
    for (std::size_t m = 1; m <= l; ++m) {
      Integer above = m < l ? s[l - 1][m] : Integer(0);
      s[l][m] = Integer(static_cast<unsigned long>(m)) * above + s[l - 1][m - 1];
    }
  }
  return s;
}

Integer stirling2(std::size_t l, std::size_t m) {
  if (m > l) return 0;
  return stirling2_table(l)[l][m];
}

TruncatedSeries polylog_in_u(long k, std::size_t cap) {
  std::vector<Rational> c(cap + 1);
  for (std::size_t m = 1; m <= cap; ++m) {
    // k <= 0 gives the integer multiplier m^{-k}.
    c[m] = pow(Rational(static_cast<unsigned long>(m)), -k);
  }
  return TruncatedSeries(cap, std::move(c));
}

TruncatedSeries one_minus_exp_neg(std::size_t cap) {
  return TruncatedSeries::constant(1, cap) - exp_scaled(-1, cap);
}

TruncatedSeries polylog_series(long k, std::size_t cap) { return compose(polylog_in_u(k, cap), one_minus_exp_neg(cap)); }

TruncatedSeries poly_bernoulli_kernel(long k, std::size_t cap) {
  return divide(polylog_series(k, cap + 1), one_minus_exp_neg(cap + 1));
}

namespace {

TruncatedSeries barnes_product(const BarnesParams& p, std::size_t cap) {
  TruncatedSeries prod = TruncatedSeries::constant(1, cap);
  for (const auto& a : p.a()) prod = prod * (exp_scaled(a, cap) - TruncatedSeries::constant(1, cap));
  return prod;
}

}  // namespace

TruncatedSeries barnes_kernel(const BarnesParams& p, std::size_t cap) {
  const std::size_t wide = cap + p.r();
  return divide(TruncatedSeries::monomial(p.r(), wide), barnes_product(p, wide));
}

AppellDescriptor poly_bernoulli_descriptor(long k, std::size_t cap) {
  return {divide(one_minus_exp_neg(cap + 1), polylog_series(k, cap + 1)), "poly-bernoulli(k=" + std::to_string(k) + ")"};
}

AppellDescriptor barnes_descriptor(const BarnesParams& p, std::size_t cap) {
  const std::size_t wide = cap + p.r();
  return {divide(barnes_product(p, wide), TruncatedSeries::monomial(p.r(), wide)), "barnes(a=" + p.to_string() + ")"};
}

AppellDescriptor mixed_descriptor(const MixedFamilyKey& key, std::size_t cap) {
  return {barnes_descriptor(key.params, cap).g * poly_bernoulli_descriptor(key.k, cap).g,
          "mixed(r=" + std::to_string(key.r()) + ",k=" + std::to_string(key.k) + ",a=" + key.params.to_string() + ")"};
}

AppellDescriptor frobenius_euler_descriptor(std::size_t s, const Rational& lambda, std::size_t cap) {
  if (lambda == 1) throw InvalidParamsError("lambda must differ from 1");
  const TruncatedSeries base = Rational(1 / (1 - lambda)) * (exp_scaled(1, cap) - TruncatedSeries::constant(lambda, cap));
  return {power(base, static_cast<unsigned>(s)),
          "frobenius-euler(s=" + std::to_string(s) + ",lambda=" + to_string(lambda) + ")"};
}

AppellDescriptor higher_bernoulli_descriptor(std::size_t s, std::size_t cap) {
  const TruncatedSeries base =
      divide(exp_scaled(1, cap + 1) - TruncatedSeries::constant(1, cap + 1), TruncatedSeries::monomial(1, cap + 1));
  return {power(base, static_cast<unsigned>(s)), "higher-bernoulli(s=" + std::to_string(s) + ")"};
}

Polynomial poly_bernoulli_poly(std::size_t n, long k) {
  return appell_polynomial(poly_bernoulli_descriptor(k, n + kCapGuard), n);
}

Polynomial barnes_bernoulli_poly(std::size_t n, const BarnesParams& p) {
  return appell_polynomial(barnes_descriptor(p, n + kCapGuard), n);
}

Polynomial mixed_poly(std::size_t n, const MixedFamilyKey& key) {
  return appell_polynomial(mixed_descriptor(key, n + kCapGuard), n);
}

Polynomial frobenius_euler_poly(std::size_t n, std::size_t s, const Rational& lambda) {
  return appell_polynomial(frobenius_euler_descriptor(s, lambda, n + kCapGuard), n);
}

Polynomial higher_bernoulli_poly(std::size_t n, std::size_t s) {
  return appell_polynomial(higher_bernoulli_descriptor(s, n + kCapGuard), n);
}

Polynomial falling_factorial(std::size_t m) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 0; i < m; ++i) p = p * Polynomial::linear_root(Rational(static_cast<unsigned long>(i)));
  return p;
}

Polynomial rising_factorial(std::size_t m) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 0; i < m; ++i) p = p * Polynomial::linear_root(-Rational(static_cast<unsigned long>(i)));
  return p;
}

}  // namespace umbral
