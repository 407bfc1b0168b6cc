#include "umbral/umbral.hpp"

#include <string>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

void require_cap(const TruncatedSeries& f, long degree, const char* what) {
  if (degree > static_cast<long>(f.cap())) {
    throw CapExhaustedError(std::string(what) + ": series cap " + std::to_string(f.cap()) +
                            " is below polynomial degree " + std::to_string(degree));
  }
}

}  // namespace

Rational functional_apply(const TruncatedSeries& f, const Polynomial& p) {
  require_cap(f, p.degree(), "functional_apply");
  Rational acc = 0;
  Integer fact = 1;
  for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    if (p.coeffs()[n] != 0) acc += p.coeffs()[n] * fact * f[n];
  }
  return acc;
}

Polynomial operator_apply(const TruncatedSeries& f, const Polynomial& p) {
  require_cap(f, p.degree(), "operator_apply");
  Polynomial result;
  Polynomial d = p;
  for (std::size_t k = 0; !d.is_zero(); ++k) {
    if (f[k] != 0) result += f[k] * d;
    d = d.derivative();
  }
  return result;
}

Polynomial shift(const Polynomial& p, const Rational& y) {
  const auto c = p.coeffs();
  std::vector<Rational> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    // x^j -> sum_i C(j,i) y^{j-i} x^i
    Rational ypow = 1;
    for (std::size_t i = j + 1; i-- > 0;) {
      out[i] += c[j] * binomial(static_cast<long>(j), static_cast<long>(i)) * ypow;
      ypow *= y;
    }
  }
  return Polynomial(std::move(out));
}

AppellDescriptor::AppellDescriptor(TruncatedSeries g_, std::string label_) : g(std::move(g_)), label(std::move(label_)) {
  if (g[0] == 0) throw InvalidParamsError("Appell descriptor '" + label + "' is not invertible: g(0) = 0");
}

ShefferTarget::ShefferTarget(TruncatedSeries h_, TruncatedSeries l_, std::string label_)
    : h(std::move(h_)), l(std::move(l_)), label(std::move(label_)) {
  if (h[0] == 0) throw InvalidParamsError("Sheffer target '" + label + "': h(0) = 0");
  if (l[0] != 0 || l.cap() < 1 || l[1] == 0) {
    throw InvalidParamsError("Sheffer target '" + label + "': l(t) is not a delta series");
  }
}

AppellSequence::AppellSequence(const AppellDescriptor& d)
    : AppellSequence(divide(TruncatedSeries::constant(1, d.g.cap()), d.g), d.label) {}

AppellSequence::AppellSequence(TruncatedSeries generating, std::string label)
    : generating_(std::move(generating)), label_(std::move(label)), moments_(generating_.cap() + 1) {
  Integer fact = 1;
  for (std::size_t i = 0; i <= generating_.cap(); ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    moments_[i] = generating_[i] * fact;
  }
}

AppellSequence AppellSequence::from_generating(TruncatedSeries generating, std::string label) {
  if (generating[0] == 0) throw InvalidParamsError("generating series of '" + label + "' is not invertible");
  return AppellSequence(std::move(generating), std::move(label));
}

const Rational& AppellSequence::number(std::size_t n) const {
  if (n > cap()) {
    throw CapExhaustedError(label_ + ": index " + std::to_string(n) + " exceeds cap " + std::to_string(cap()));
  }
  return moments_[n];
}

Polynomial AppellSequence::polynomial(std::size_t n) const {
  if (n > cap()) {
    throw CapExhaustedError(label_ + ": degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap()));
  }
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = binomial(static_cast<long>(n), static_cast<long>(j)) * moments_[n - j];
  return Polynomial(std::move(c));
}

Polynomial appell_polynomial(const AppellDescriptor& d, std::size_t n) {
  if (n > d.g.cap()) {
    throw CapExhaustedError(d.label + ": degree " + std::to_string(n) + " exceeds cap " + std::to_string(d.g.cap()));
  }
  return AppellSequence(d).polynomial(n);
}

RationalMatrix connection_coefficients(const TruncatedSeries& source_g, const ShefferTarget& target, std::size_t n) {
  for (const auto* s : {&source_g, &target.h, &target.l}) {
    if (s->cap() < n) throw CapExhaustedError("connection_coefficients: series cap below n");
  }
  const TruncatedSeries ratio = target.h * divide(TruncatedSeries::constant(1, source_g.cap()), source_g);
  RationalMatrix c(n + 1, std::vector<Rational>(n + 1));
  TruncatedSeries term = ratio;
  Integer m_fact = 1;
  for (std::size_t m = 0; m <= n; ++m) {
    if (m > 0) {
      term = term * target.l;
      m_fact *= static_cast<unsigned long>(m);
    }
    // <term | x^i> / m! = i! [t^i] term / m!
    Integer i_fact = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i > 0) i_fact *= static_cast<unsigned long>(i);
      if (i >= m) c[i][m] = Rational(i_fact * term[i]) / m_fact;
    }
  }
  return c;
}

}  // namespace umbral
