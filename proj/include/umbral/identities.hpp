#pragma once

// Executable forms of the mixed-type identities. Every verifier computes the
// left side with the mixed-type generator (division by g_{r,k}) and the right
// side from the auxiliary families held in an Ingredients object, whose
// mixed-type numbers come from the product of the two inverse kernels. The two
// paths share no intermediate series.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "umbral/families.hpp"

namespace umbral {

enum class TheoremId { T1a, T1b, T1c, T1d, T1e, T2, T3, T4, T4remark, T5, T6, T7, T8, T9 };

std::string_view to_string(TheoremId id);

struct ReportParams {
  std::size_t n = 0;
  MixedFamilyKey key;
  std::optional<Rational> y;
  std::optional<Rational> x0;
  std::optional<std::size_t> s;
  std::optional<Rational> lambda;
};

using ReportValue = std::variant<Polynomial, Rational>;

struct CoefficientDiff {
  std::size_t index = 0;
  Rational lhs;
  Rational rhs;
};

/// Outcome of a second, independent computation of the same quantity.
struct CrossCheck {
  std::string method;
  bool agrees = false;
};

struct IdentityReport {
  TheoremId id;
  ReportParams params;
  ReportValue lhs;
  ReportValue rhs;
  bool equal = false;
  std::optional<CoefficientDiff> first_diff;
  std::optional<CrossCheck> cross_check;
};

/// equal iff lhs and rhs agree coefficientwise and the cross check (if any) agrees.
IdentityReport make_report(TheoremId id, ReportParams params, ReportValue lhs, ReportValue rhs,
                           std::optional<CrossCheck> cross_check = std::nullopt);

/// Auxiliary families for one key, all truncated at a common cap.
///
/// Holds the classical Bernoulli numbers, the Stirling triangle, and Appell
/// sequences for B_n(x|a), B_n^{(k)}(x), B_n^{(k-1)}(x), S_n^{(r,k)}(x|a) and
/// the extended families S_n^{(r+1,k)}(x|a,1), S_n^{(r+1,k-1)}(x|a,1). The
/// perturb_* hooks exist for the harness self-tests.
class Ingredients {
 public:
  enum class Kernel { Barnes, BarnesExtended, Polylog, PolylogPrev };

  /// Cap max_n + kCapGuard, Stirling rows up to max_n + max_s.
  Ingredients(MixedFamilyKey key, std::size_t max_n, std::size_t max_s = 3);
  static Ingredients with_cap(MixedFamilyKey key, std::size_t cap, std::size_t max_s = 3);

  const MixedFamilyKey& key() const { return key_; }
  std::size_t cap() const { return cap_; }

  const Rational& bernoulli(std::size_t i) const;
  const Integer& stirling(std::size_t l, std::size_t m) const;

  const AppellSequence& barnes() const { return *barnes_; }
  const AppellSequence& poly_bernoulli() const { return *poly_bernoulli_; }
  const AppellSequence& poly_bernoulli_prev() const { return *poly_bernoulli_prev_; }
  const AppellSequence& mixed() const { return *mixed_; }
  const AppellSequence& extended() const { return *extended_; }
  const AppellSequence& extended_prev() const { return *extended_prev_; }

  /// t^r / prod (e^{a_j t} - 1)
  const TruncatedSeries& barnes_kernel() const { return barnes_kernel_; }
  /// Li_k(1 - e^{-t}), one degree beyond the cap.
  const TruncatedSeries& polylog() const { return polylog_; }

  void perturb_bernoulli(std::size_t i, const Rational& delta);
  void perturb_stirling(std::size_t l, std::size_t m, const Rational& delta);
  void perturb_kernel(Kernel which, std::size_t i, const Rational& delta);

  std::size_t bernoulli_count() const { return bernoulli_.size(); }
  std::size_t stirling_rows() const { return stirling_.size(); }

 private:
  struct CapTag {};
  Ingredients(CapTag, MixedFamilyKey key, std::size_t cap, std::size_t stirling_rows);
  void rebuild();

  MixedFamilyKey key_;
  std::size_t cap_;
  std::vector<Rational> bernoulli_;
  std::vector<std::vector<Integer>> stirling_;
  TruncatedSeries barnes_kernel_;
  TruncatedSeries barnes_extended_kernel_;
  TruncatedSeries polylog_;
  TruncatedSeries polylog_prev_;
  std::optional<AppellSequence> barnes_, poly_bernoulli_, poly_bernoulli_prev_, mixed_, extended_, extended_prev_;
};

/// Right-hand sides, written in the indexing of the formulas they encode.
namespace rhs {

Polynomial explicit_a(std::size_t n, const Ingredients& in);
Polynomial explicit_b(std::size_t n, const Ingredients& in);
/// Triple sum over (x - j)^l. With printed_range the m-sum runs over l..n as
/// typeset in the original statement; otherwise over 0..n, the range the
/// derivation produces. Only the latter is an identity.
Polynomial explicit_c(std::size_t n, const Ingredients& in, bool printed_range = false);
Polynomial explicit_d(std::size_t n, const Ingredients& in);
Polynomial explicit_e(std::size_t n, const Ingredients& in);
Polynomial sheffer(std::size_t n, const Ingredients& in, const Rational& y);
/// Right side for S_{n+1}; flip_bracket swaps the two extended-family terms.
Polynomial recurrence(std::size_t n, const Ingredients& in, bool flip_bracket = false);
/// Right side for S_n, n >= 1.
Polynomial more_relation(std::size_t n, const Ingredients& in);
/// The re-indexed form given after the second recurrence, right side for S_{n+1}.
Polynomial remark(std::size_t n, const Ingredients& in);
Rational number_relation_lhs(std::size_t n, const Ingredients& in);
Rational number_relation_rhs(std::size_t n, const Ingredients& in);
/// <t^r / prod (e^{a_j t} - 1) Li_k(1 - e^{-t}) | x^{n+1}>
Rational number_relation_pairing(std::size_t n, const Ingredients& in);
std::vector<Rational> falling_coefficients(std::size_t n, const Ingredients& in);
std::vector<Rational> rising_coefficients(std::size_t n, const Ingredients& in);
std::vector<Rational> frobenius_coefficients(std::size_t n, const Ingredients& in, std::size_t s, const Rational& lambda);
std::vector<Rational> higher_bernoulli_coefficients(std::size_t n, const Ingredients& in, std::size_t s);

}  // namespace rhs

std::vector<IdentityReport> verify_explicit(std::size_t n, const Ingredients& in);
IdentityReport verify_sheffer(std::size_t n, const Ingredients& in, const Rational& x0, const Rational& y0);
IdentityReport verify_recurrence(std::size_t n, const Ingredients& in);
/// {T4, T4remark}. Throws DomainError for n = 0.
std::vector<IdentityReport> verify_more_relation(std::size_t n, const Ingredients& in);
/// Remark form at index remark_n against the first recurrence at recurrence_n.
IdentityReport verify_remark(std::size_t remark_n, std::size_t recurrence_n, const Ingredients& in);
IdentityReport verify_number_relation(std::size_t n, const Ingredients& in);
IdentityReport verify_falling(std::size_t n, const Ingredients& in);
IdentityReport verify_rising(std::size_t n, const Ingredients& in);
/// Throws InvalidParamsError if lambda = 1.
IdentityReport verify_frobenius(std::size_t n, const Ingredients& in, std::size_t s, const Rational& lambda);
IdentityReport verify_higher_bernoulli(std::size_t n, const Ingredients& in, std::size_t s);

// Convenience overloads that build their own Ingredients.
std::vector<IdentityReport> verify_explicit(std::size_t n, const MixedFamilyKey& key);
IdentityReport verify_sheffer(std::size_t n, const MixedFamilyKey& key, const Rational& x0, const Rational& y0);
IdentityReport verify_recurrence(std::size_t n, const MixedFamilyKey& key);
std::vector<IdentityReport> verify_more_relation(std::size_t n, const MixedFamilyKey& key);
IdentityReport verify_number_relation(std::size_t n, const MixedFamilyKey& key);
IdentityReport verify_falling(std::size_t n, const MixedFamilyKey& key);
IdentityReport verify_rising(std::size_t n, const MixedFamilyKey& key);
IdentityReport verify_frobenius(std::size_t n, const MixedFamilyKey& key, std::size_t s, const Rational& lambda);
IdentityReport verify_higher_bernoulli(std::size_t n, const MixedFamilyKey& key, std::size_t s);

}  // namespace umbral
