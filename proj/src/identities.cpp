#include "umbral/identities.hpp"

#include <algorithm>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

Rational binom(std::size_t n, std::size_t k) {
  return Rational(binomial(static_cast<long>(n), static_cast<long>(k)));
}

Rational sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational from_size(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

/// (m + 1)^{-k}
Rational polylog_weight(std::size_t m, long k) { return pow(from_size(m + 1), -k); }

Polynomial expand(const std::vector<Rational>& coeffs, const std::vector<Polynomial>& basis) {
  Polynomial p;
  for (std::size_t m = 0; m < coeffs.size(); ++m) p += coeffs[m] * basis[m];
  return p;
}

std::optional<CoefficientDiff> first_difference(const ReportValue& lhs, const ReportValue& rhs) {
  if (const auto* lp = std::get_if<Polynomial>(&lhs)) {
    const auto& rp = std::get<Polynomial>(rhs);
    const std::size_t len = static_cast<std::size_t>(std::max(lp->degree(), rp.degree()) + 1);
    for (std::size_t i = 0; i < len; ++i) {
      if (lp->coeff(i) != rp.coeff(i)) return CoefficientDiff{i, lp->coeff(i), rp.coeff(i)};
    }
    return std::nullopt;
  }
  const auto& l = std::get<Rational>(lhs);
  const auto& r = std::get<Rational>(rhs);
  if (l != r) return CoefficientDiff{0, l, r};
  return std::nullopt;
}

/// Last row of the connection matrix against the given target.
CrossCheck connection_check(std::size_t n, const MixedFamilyKey& key, const ShefferTarget& target,
                            const std::vector<Rational>& coeffs) {
  const auto g = mixed_descriptor(key, n + kCapGuard).g;
  const auto c = connection_coefficients(g, target, n);
  return {"connection_coefficients:" + target.label, c[n] == coeffs};
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1a: return "T1a";
    case TheoremId::T1b: return "T1b";
    case TheoremId::T1c: return "T1c";
    case TheoremId::T1d: return "T1d";
    case TheoremId::T1e: return "T1e";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T4remark: return "T4remark";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::T8: return "T8";
    case TheoremId::T9: return "T9";
  }
  return "?";
}

IdentityReport make_report(TheoremId id, ReportParams params, ReportValue lhs, ReportValue rhs,
                           std::optional<CrossCheck> cross_check) {
  IdentityReport r{id, std::move(params), std::move(lhs), std::move(rhs), false, std::nullopt, std::move(cross_check)};
  r.first_diff = first_difference(r.lhs, r.rhs);
  r.equal = !r.first_diff && (!r.cross_check || r.cross_check->agrees);
  return r;
}

// ---------------------------------------------------------------------------
// Ingredients

Ingredients::Ingredients(MixedFamilyKey key, std::size_t max_n, std::size_t max_s)
    : Ingredients(CapTag{}, std::move(key), max_n + kCapGuard, max_n + max_s + kCapGuard) {}

Ingredients Ingredients::with_cap(MixedFamilyKey key, std::size_t cap, std::size_t max_s) {
  return Ingredients(CapTag{}, std::move(key), cap, cap + max_s);
}

Ingredients::Ingredients(CapTag, MixedFamilyKey key, std::size_t cap, std::size_t stirling_rows)
    : key_(std::move(key)),
      cap_(cap),
      bernoulli_(bernoulli_numbers(cap)),
      stirling_(stirling2_table(stirling_rows)),
      barnes_kernel_(umbral::barnes_kernel(key_.params, cap)),
      barnes_extended_kernel_(umbral::barnes_kernel(key_.params.appended(1), cap)),
      polylog_(polylog_series(key_.k, cap + 1)),
      polylog_prev_(polylog_series(key_.k - 1, cap + 1)) {
  rebuild();
}

void Ingredients::rebuild() {
  const auto u = one_minus_exp_neg(cap_ + 1);
  const auto pb = divide(polylog_, u);
  const auto pb_prev = divide(polylog_prev_, u);
  barnes_ = AppellSequence::from_generating(barnes_kernel_, "barnes");
  poly_bernoulli_ = AppellSequence::from_generating(pb, "poly-bernoulli");
  poly_bernoulli_prev_ = AppellSequence::from_generating(pb_prev, "poly-bernoulli(k-1)");
  mixed_ = AppellSequence::from_generating(barnes_kernel_ * pb, "mixed");
  extended_ = AppellSequence::from_generating(barnes_extended_kernel_ * pb, "mixed(r+1,k)");
  extended_prev_ = AppellSequence::from_generating(barnes_extended_kernel_ * pb_prev, "mixed(r+1,k-1)");
}

const Rational& Ingredients::bernoulli(std::size_t i) const {
  if (i >= bernoulli_.size()) throw CapExhaustedError("Bernoulli index beyond ingredient cap");
  return bernoulli_[i];
}

const Integer& Ingredients::stirling(std::size_t l, std::size_t m) const {
  if (l >= stirling_.size()) throw CapExhaustedError("Stirling row beyond ingredient table");
  static const Integer zero = 0;
  return m <= l ? stirling_[l][m] : zero;
}

void Ingredients::perturb_bernoulli(std::size_t i, const Rational& delta) { bernoulli_.at(i) += delta; }

void Ingredients::perturb_stirling(std::size_t l, std::size_t m, const Rational& delta) {
  // The table is integer valued; a non-integer delta is truncated toward zero.
  stirling_.at(l).at(m) += Integer(delta);
}

void Ingredients::perturb_kernel(Kernel which, std::size_t i, const Rational& delta) {
  TruncatedSeries* s = nullptr;
  switch (which) {
    case Kernel::Barnes: s = &barnes_kernel_; break;
    case Kernel::BarnesExtended: s = &barnes_extended_kernel_; break;
    case Kernel::Polylog: s = &polylog_; break;
    case Kernel::PolylogPrev: s = &polylog_prev_; break;
  }
  *s = s->with_coeff(i, (*s)[i] + delta);
  rebuild();
}

// ---------------------------------------------------------------------------
// Right-hand sides

namespace rhs {

Polynomial explicit_a(std::size_t n, const Ingredients& in) {
  Polynomial p;
  for (std::size_t l = 0; l <= n; ++l) p += binom(n, l) * in.barnes().number(n - l) * in.poly_bernoulli().polynomial(l);
  return p;
}

Polynomial explicit_b(std::size_t n, const Ingredients& in) {
  Polynomial p;
  for (std::size_t l = 0; l <= n; ++l) p += binom(n, l) * in.poly_bernoulli().number(n - l) * in.barnes().polynomial(l);
  return p;
}

Polynomial explicit_c(std::size_t n, const Ingredients& in, bool printed_range) {
  const long k = in.key().k;
  Polynomial p;
  for (std::size_t l = 0; l <= n; ++l) {
    const Rational outer = binom(n, l) * in.barnes().number(n - l);
    for (std::size_t m = printed_range ? l : 0; m <= n; ++m) {
      const Rational w = outer * polylog_weight(m, k);
      for (std::size_t j = 0; j <= m; ++j) {
        Polynomial shifted = Polynomial::constant(1);
        const Polynomial root = Polynomial::linear_root(from_size(j));
        for (std::size_t e = 0; e < l; ++e) shifted = shifted * root;
        p += Rational(w * sign(j) * binom(m, j)) * shifted;
      }
    }
  }
  return p;
}

Polynomial explicit_d(std::size_t n, const Ingredients& in) {
  const long k = in.key().k;
  std::vector<Rational> c(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::size_t j = l; j <= n; ++j) {
      for (std::size_t m = 0; m <= n - j; ++m) {
        c[l] += sign(n - m - j) * binom(n, j) * binom(j, l) * Rational(factorial(static_cast<unsigned>(m))) *
                polylog_weight(m, k) * Rational(in.stirling(n - j, m)) * in.barnes().number(j - l);
      }
    }
  }
  return Polynomial(std::move(c));
}

Polynomial explicit_e(std::size_t n, const Ingredients& in) {
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = binom(n, j) * in.mixed().number(n - j);
  return Polynomial(std::move(c));
}

Polynomial sheffer(std::size_t n, const Ingredients& in, const Rational& y) {
  Polynomial p;
  for (std::size_t j = 0; j <= n; ++j) {
    p += Rational(binom(n, j) * pow(y, static_cast<long>(n - j))) * in.mixed().polynomial(j);
  }
  return p;
}

Polynomial recurrence(std::size_t n, const Ingredients& in, bool flip_bracket) {
  const Rational inv = Rational(1) / from_size(n + 1);
  Polynomial p = Polynomial::monomial(1) * in.mixed().polynomial(n);
  for (const auto& a : in.key().params.a()) {
    for (std::size_t l = 0; l <= n; ++l) {
      const Rational w = inv * binom(n + 1, l) * pow(Rational(-a), static_cast<long>(n + 1 - l)) * in.bernoulli(n + 1 - l);
      p -= w * in.mixed().polynomial(l);
    }
  }
  Polynomial bracket = in.extended().polynomial(n + 1) - in.extended_prev().polynomial(n + 1);
  if (flip_bracket) bracket = -bracket;
  p -= inv * bracket;
  return p;
}

Polynomial more_relation(std::size_t n, const Ingredients& in) {
  if (n == 0) throw DomainError("the second recurrence is defined for n >= 1");
  Polynomial p = Polynomial::monomial(1) * in.mixed().polynomial(n - 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational power_sum = 0;
    for (const auto& a : in.key().params.a()) power_sum += pow(a, static_cast<long>(m));
    const Rational w = sign(m - 1) * binom(n - 1, m - 1) * in.bernoulli(m) / from_size(m) * power_sum;
    p += w * in.mixed().polynomial(n - m);
  }
  const Rational inv = Rational(1) / from_size(n);
  p += inv * (in.extended_prev().polynomial(n) - in.extended().polynomial(n));
  return p;
}

Polynomial remark(std::size_t n, const Ingredients& in) {
  Polynomial p = Polynomial::monomial(1) * in.mixed().polynomial(n);
  for (std::size_t l = 1; l <= n + 1; ++l) {
    Rational power_sum = 0;
    for (const auto& a : in.key().params.a()) power_sum += pow(a, static_cast<long>(l));
    const Rational w = sign(l - 1) * binom(n, l - 1) * in.bernoulli(l) / from_size(l) * power_sum;
    p += w * in.mixed().polynomial(n + 1 - l);
  }
  const Rational inv = Rational(1) / from_size(n + 1);
  p += inv * in.extended_prev().polynomial(n + 1);
  p -= inv * in.extended().polynomial(n + 1);
  return p;
}

Rational number_relation_lhs(std::size_t n, const Ingredients& in) {
  const AppellSequence direct(mixed_descriptor(in.key(), in.cap()));
  Rational acc = 0;
  for (std::size_t m = 0; m <= n; ++m) acc += binom(n + 1, m) * sign(n - m) * direct.number(m);
  return acc;
}

Rational number_relation_rhs(std::size_t n, const Ingredients& in) {
  Rational acc = 0;
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::size_t m = 0; m <= l; ++m) {
      acc += sign(l - m) * binom(l, m) * binom(n + 1, l + 1) * in.poly_bernoulli_prev().number(m) *
             in.barnes().number(n - l);
    }
  }
  return acc;
}

Rational number_relation_pairing(std::size_t n, const Ingredients& in) {
  return functional_apply(in.barnes_kernel() * in.polylog(), Polynomial::monomial(n + 1));
}

std::vector<Rational> falling_coefficients(std::size_t n, const Ingredients& in) {
  std::vector<Rational> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t l = m; l <= n; ++l) c[m] += Rational(in.stirling(l, m)) * binom(n, l) * in.mixed().number(n - l);
  }
  return c;
}

std::vector<Rational> rising_coefficients(std::size_t n, const Ingredients& in) {
  std::vector<Rational> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    const Rational at = -from_size(m);
    for (std::size_t l = m; l <= n; ++l) {
      c[m] += Rational(in.stirling(l, m)) * binom(n, l) * in.mixed().polynomial(n - l).evaluate(at);
    }
  }
  return c;
}

std::vector<Rational> frobenius_coefficients(std::size_t n, const Ingredients& in, std::size_t s, const Rational& lambda) {
  if (lambda == 1) throw InvalidParamsError("lambda must differ from 1");
  const Rational scale = pow(Rational(1 - lambda), -static_cast<long>(s));
  std::vector<Rational> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    const Polynomial lower = in.mixed().polynomial(n - m);
    Rational inner = 0;
    for (std::size_t j = 0; j <= s; ++j) {
      inner += binom(s, j) * pow(Rational(-lambda), static_cast<long>(s - j)) * lower.evaluate(from_size(j));
    }
    c[m] = binom(n, m) * scale * inner;
  }
  return c;
}

std::vector<Rational> higher_bernoulli_coefficients(std::size_t n, const Ingredients& in, std::size_t s) {
  std::vector<Rational> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational inner = 0;
    for (std::size_t l = 0; l <= n - m; ++l) {
      inner += binom(n - m, l) / binom(l + s, l) * Rational(in.stirling(l + s, s)) * in.mixed().number(n - m - l);
    }
    c[m] = binom(n, m) * inner;
  }
  return c;
}

}  // namespace rhs

// ---------------------------------------------------------------------------
// Verifiers

namespace {

ReportParams base_params(std::size_t n, const Ingredients& in) { return ReportParams{n, in.key(), {}, {}, {}, {}}; }

}  // namespace

std::vector<IdentityReport> verify_explicit(std::size_t n, const Ingredients& in) {
  const Polynomial lhs = mixed_poly(n, in.key());
  const auto p = base_params(n, in);
  return {
      make_report(TheoremId::T1a, p, lhs, rhs::explicit_a(n, in)),
      make_report(TheoremId::T1b, p, lhs, rhs::explicit_b(n, in)),
      make_report(TheoremId::T1c, p, lhs, rhs::explicit_c(n, in)),
      make_report(TheoremId::T1d, p, lhs, rhs::explicit_d(n, in)),
      make_report(TheoremId::T1e, p, lhs, rhs::explicit_e(n, in)),
  };
}

IdentityReport verify_sheffer(std::size_t n, const Ingredients& in, const Rational& x0, const Rational& y0) {
  auto p = base_params(n, in);
  p.y = y0;
  p.x0 = x0;
  const Polynomial lhs = shift(mixed_poly(n, in.key()), y0);
  const Polynomial rhs_poly = rhs::sheffer(n, in, y0);
  const bool pointwise = lhs.evaluate(x0) == rhs_poly.evaluate(x0);
  return make_report(TheoremId::T2, std::move(p), lhs, rhs_poly, CrossCheck{"evaluation at x0", pointwise});
}

IdentityReport verify_recurrence(std::size_t n, const Ingredients& in) {
  return make_report(TheoremId::T3, base_params(n, in), mixed_poly(n + 1, in.key()), rhs::recurrence(n, in));
}

std::vector<IdentityReport> verify_more_relation(std::size_t n, const Ingredients& in) {
  if (n == 0) throw DomainError("the second recurrence is defined for n >= 1");
  return {make_report(TheoremId::T4, base_params(n, in), mixed_poly(n, in.key()), rhs::more_relation(n, in)),
          verify_remark(n - 1, n - 1, in)};
}

IdentityReport verify_remark(std::size_t remark_n, std::size_t recurrence_n, const Ingredients& in) {
  return make_report(TheoremId::T4remark, base_params(remark_n + 1, in), rhs::remark(remark_n, in),
                     rhs::recurrence(recurrence_n, in));
}

IdentityReport verify_number_relation(std::size_t n, const Ingredients& in) {
  const Rational pairing = rhs::number_relation_pairing(n, in);
  const Rational lhs = rhs::number_relation_lhs(n, in);
  const Rational rhs_value = rhs::number_relation_rhs(n, in);
  return make_report(TheoremId::T5, base_params(n, in), lhs, rhs_value,
                     CrossCheck{"pairing", pairing == lhs && pairing == rhs_value});
}

IdentityReport verify_falling(std::size_t n, const Ingredients& in) {
  const auto c = rhs::falling_coefficients(n, in);
  std::vector<Polynomial> basis;
  for (std::size_t m = 0; m <= n; ++m) basis.push_back(falling_factorial(m));
  const std::size_t cap = n + kCapGuard;
  const ShefferTarget target(TruncatedSeries::constant(1, cap), exp_scaled(1, cap) - TruncatedSeries::constant(1, cap),
                             "(1, e^t - 1)");
  return make_report(TheoremId::T6, base_params(n, in), mixed_poly(n, in.key()), expand(c, basis),
                     connection_check(n, in.key(), target, c));
}

IdentityReport verify_rising(std::size_t n, const Ingredients& in) {
  const auto c = rhs::rising_coefficients(n, in);
  std::vector<Polynomial> basis;
  for (std::size_t m = 0; m <= n; ++m) basis.push_back(rising_factorial(m));
  const std::size_t cap = n + kCapGuard;
  const ShefferTarget target(TruncatedSeries::constant(1, cap), one_minus_exp_neg(cap), "(1, 1 - e^-t)");
  return make_report(TheoremId::T7, base_params(n, in), mixed_poly(n, in.key()), expand(c, basis),
                     connection_check(n, in.key(), target, c));
}

IdentityReport verify_frobenius(std::size_t n, const Ingredients& in, std::size_t s, const Rational& lambda) {
  if (lambda == 1) throw InvalidParamsError("lambda must differ from 1");
  auto p = base_params(n, in);
  p.s = s;
  p.lambda = lambda;
  const auto c = rhs::frobenius_coefficients(n, in, s, lambda);
  const auto d = frobenius_euler_descriptor(s, lambda, n + kCapGuard);
  const AppellSequence h(d);
  std::vector<Polynomial> basis;
  for (std::size_t m = 0; m <= n; ++m) basis.push_back(h.polynomial(m));
  const ShefferTarget target(d.g, TruncatedSeries::monomial(1, d.g.cap()), d.label);
  return make_report(TheoremId::T8, std::move(p), mixed_poly(n, in.key()), expand(c, basis),
                     connection_check(n, in.key(), target, c));
}

IdentityReport verify_higher_bernoulli(std::size_t n, const Ingredients& in, std::size_t s) {
  auto p = base_params(n, in);
  p.s = s;
  const auto c = rhs::higher_bernoulli_coefficients(n, in, s);
  const auto d = higher_bernoulli_descriptor(s, n + kCapGuard);
  const AppellSequence b(d);
  std::vector<Polynomial> basis;
  for (std::size_t m = 0; m <= n; ++m) basis.push_back(b.polynomial(m));
  const ShefferTarget target(d.g, TruncatedSeries::monomial(1, d.g.cap()), d.label);
  return make_report(TheoremId::T9, std::move(p), mixed_poly(n, in.key()), expand(c, basis),
                     connection_check(n, in.key(), target, c));
}

std::vector<IdentityReport> verify_explicit(std::size_t n, const MixedFamilyKey& key) {
  return verify_explicit(n, Ingredients(key, n));
}
IdentityReport verify_sheffer(std::size_t n, const MixedFamilyKey& key, const Rational& x0, const Rational& y0) {
  return verify_sheffer(n, Ingredients(key, n), x0, y0);
}
IdentityReport verify_recurrence(std::size_t n, const MixedFamilyKey& key) {
  return verify_recurrence(n, Ingredients(key, n + 1));
}
std::vector<IdentityReport> verify_more_relation(std::size_t n, const MixedFamilyKey& key) {
  return verify_more_relation(n, Ingredients(key, n));
}
IdentityReport verify_number_relation(std::size_t n, const MixedFamilyKey& key) {
  return verify_number_relation(n, Ingredients(key, n));
}
IdentityReport verify_falling(std::size_t n, const MixedFamilyKey& key) { return verify_falling(n, Ingredients(key, n)); }
IdentityReport verify_rising(std::size_t n, const MixedFamilyKey& key) { return verify_rising(n, Ingredients(key, n)); }
IdentityReport verify_frobenius(std::size_t n, const MixedFamilyKey& key, std::size_t s, const Rational& lambda) {
  return verify_frobenius(n, Ingredients(key, n, s), s, lambda);
}
IdentityReport verify_higher_bernoulli(std::size_t n, const MixedFamilyKey& key, std::size_t s) {
  return verify_higher_bernoulli(n, Ingredients(key, n, s), s);
}

}  // namespace umbral
