#include "umbral/series.hpp"

#include <algorithm>
#include <string>

#include "umbral/errors.hpp"

namespace umbral {

TruncatedSeries::TruncatedSeries(std::size_t cap) : coeffs_(cap + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t cap, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(cap + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t cap) {
  TruncatedSeries s(cap);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, std::size_t cap, const Rational& c) {
  TruncatedSeries s(cap);
  if (k <= cap) s.coeffs_[k] = c;
  return s;
}

Rational TruncatedSeries::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::optional<std::size_t> TruncatedSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_cap) const {
  if (new_cap > cap()) {
    throw CapExhaustedError("cannot extend a series from cap " + std::to_string(cap()) + " to " +
                            std::to_string(new_cap));
  }
  return TruncatedSeries(new_cap, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_cap + 1));
}

TruncatedSeries TruncatedSeries::with_coeff(std::size_t i, Rational value) const {
  TruncatedSeries s = *this;
  if (i > cap()) throw CapExhaustedError("coefficient index beyond cap");
  s.coeffs_[i] = std::move(value);
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  TruncatedSeries s(cap);
  for (std::size_t i = 0; i <= cap; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  TruncatedSeries s(cap);
  for (std::size_t i = 0; i <= cap; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= cap; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  TruncatedSeries r = s;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + cap + 1, b.coeffs_.begin());
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries power(const TruncatedSeries& s, unsigned e) {
  TruncatedSeries r = TruncatedSeries::constant(1, s.cap());
  for (unsigned i = 0; i < e; ++i) r = r * s;
  return r;
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto ob = b.order();
  if (!ob) throw ZeroDivisorError("divisor is zero up to its cap");
  const std::size_t m = *ob;
  const auto oa = a.order();
  if (oa && *oa < m) {
    throw DivisionOrderError("numerator has order " + std::to_string(*oa) + " below divisor order " +
                             std::to_string(m));
  }
  if (m > a.cap()) throw CapExhaustedError("numerator cap is below the divisor order");
  const std::size_t cap = std::min(a.cap(), b.cap()) - m;

  // q_i = (a_{i+m} - sum_{j<i} q_j b_{i-j+m}) / b_m
  const Rational lead_inv = 1 / b[m];
  std::vector<Rational> q(cap + 1);
  for (std::size_t i = 0; i <= cap; ++i) {
    Rational acc = a[i + m];
    for (std::size_t j = 0; j < i; ++j) acc -= q[j] * b[i - j + m];
    q[i] = acc * lead_inv;
  }
  return TruncatedSeries(cap, std::move(q));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0) throw NotDeltaError("inner series of a composition must have zero constant term");
  const std::size_t cap = std::min(f.cap(), g.cap());
  const TruncatedSeries inner = g.truncated(cap);
  TruncatedSeries result = TruncatedSeries::constant(f[0], cap);
  TruncatedSeries gpow = TruncatedSeries::constant(1, cap);
  // order(g^i) >= i, so powers beyond the cap contribute nothing.
  for (std::size_t i = 1; i <= cap; ++i) {
    gpow = gpow * inner;
    if (f[i] != 0) result = result + f[i] * gpow;
  }
  return result;
}

TruncatedSeries exp_scaled(const Rational& a, std::size_t cap) {
  std::vector<Rational> c(cap + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= cap; ++i) c[i] = c[i - 1] * a / static_cast<unsigned long>(i);
  return TruncatedSeries(cap, std::move(c));
}

TruncatedSeries derivative_t(const TruncatedSeries& s) {
  if (s.cap() == 0) throw CapExhaustedError("cannot differentiate a series truncated at cap 0");
  std::vector<Rational> c(s.cap());
  for (std::size_t i = 0; i + 1 <= s.cap(); ++i) c[i] = s[i + 1] * static_cast<unsigned long>(i + 1);
  return TruncatedSeries(s.cap() - 1, std::move(c));
}

}  // namespace umbral
