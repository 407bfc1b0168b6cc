#include <doctest.h>

#include "umbral/errors.hpp"
#include "umbral/identities.hpp"

using namespace umbral;

namespace {

const MixedFamilyKey kKey{BarnesParams({1, 2}), -1};
const MixedFamilyKey kUnitKey{BarnesParams({1}), 1};

bool all_equal(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.equal; });
}

}  // namespace

TEST_CASE("explicit forms at n = 0 collapse to 1/(a_1...a_r)") {
  for (const auto& r : verify_explicit(0, kKey)) {
    CHECK(r.equal);
    CHECK(std::get<Polynomial>(r.lhs) == Polynomial::constant(Rational(1, 2)));
    CHECK(std::get<Polynomial>(r.rhs) == Polynomial::constant(Rational(1, 2)));
  }
}

TEST_CASE("explicit forms hold and agree pairwise") {
  const Ingredients in(kKey, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto reports = verify_explicit(n, in);
    REQUIRE(reports.size() == 5);
    CHECK(all_equal(reports));
    for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i].rhs == reports[0].rhs);
  }
}

TEST_CASE("triple-sum form needs the full middle range") {
  const Ingredients in(kKey, 6);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(rhs::explicit_c(n, in) == mixed_poly(n, kKey));
    CHECK(rhs::explicit_c(n, in, true) != mixed_poly(n, kKey));
  }
}

TEST_CASE("perturbing a bernoulli-dependent input is reported with a diff") {
  Ingredients in(kKey, 6);
  in.perturb_kernel(Ingredients::Kernel::Barnes, 2, 1);
  const auto reports = verify_explicit(4, in);
  const auto& a = reports[0];
  CHECK_FALSE(a.equal);
  REQUIRE(a.first_diff.has_value());
  CHECK(a.first_diff->lhs != a.first_diff->rhs);

  Ingredients bern(kKey, 6);
  bern.perturb_bernoulli(3, 1);
  CHECK_FALSE(verify_recurrence(4, bern).equal);
}

TEST_CASE("sheffer identity") {
  const Ingredients in(kKey, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto same = verify_sheffer(n, in, Rational(3, 2), 0);
    CHECK(same.equal);
    CHECK(std::get<Polynomial>(same.lhs) == mixed_poly(n, kKey));
    for (const Rational y : {Rational(1), Rational(-1), Rational(1, 2)}) {
      const auto r = verify_sheffer(n, in, Rational(-2, 3), y);
      CHECK(r.equal);
      REQUIRE(r.cross_check.has_value());
      CHECK(r.cross_check->agrees);
    }
  }
}

TEST_CASE("first recurrence") {
  const auto r0 = verify_recurrence(0, kUnitKey);
  CHECK(r0.equal);
  CHECK(std::get<Polynomial>(r0.lhs).degree() == 1);
  const Ingredients in(kKey, 10);
  for (std::size_t n = 0; n <= 9; ++n) CHECK(verify_recurrence(n, in).equal);
}

TEST_CASE("flipping the extended-family bracket breaks the recurrence") {
  const Ingredients in(kKey, 8);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(rhs::recurrence(n, in, true) != mixed_poly(n + 1, kKey));
}

TEST_CASE("second recurrence and the re-indexed form") {
  CHECK(all_equal(verify_more_relation(1, kUnitKey)));
  const Ingredients in(kKey, 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto reports = verify_more_relation(n, in);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].id == TheoremId::T4);
    CHECK(reports[1].id == TheoremId::T4remark);
    CHECK(all_equal(reports));
  }
  CHECK_THROWS_AS(verify_more_relation(0, in), DomainError);
  for (std::size_t n = 2; n <= 8; ++n) CHECK_FALSE(verify_remark(n - 1, n - 2, in).equal);
}

TEST_CASE("number relation") {
  const auto r0 = verify_number_relation(0, kKey);
  CHECK(r0.equal);
  CHECK(std::get<Rational>(r0.lhs) == Rational(1, 2));
  const Ingredients in(kKey, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto r = verify_number_relation(n, in);
    CHECK(r.equal);
    CHECK(r.cross_check->method == "pairing");
  }
}

TEST_CASE("number relation refuses an undersized cap") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto in = Ingredients::with_cap(kKey, n);
    CHECK_THROWS_AS(verify_number_relation(n, in), CapExhaustedError);
    CHECK_NOTHROW(verify_number_relation(n, Ingredients::with_cap(kKey, n + kCapGuard)));
  }
}

TEST_CASE("factorial basis expansions") {
  CHECK(verify_falling(0, kKey).equal);
  CHECK(verify_rising(0, kKey).equal);
  const Ingredients in(kKey, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto f = verify_falling(n, in);
    const auto r = verify_rising(n, in);
    CHECK(f.equal);
    CHECK(r.equal);
    CHECK(f.cross_check->agrees);
    CHECK(r.cross_check->agrees);
  }
}

TEST_CASE("frobenius-euler and higher-order bernoulli expansions") {
  const Ingredients in(kKey, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    // s = 0 collapses to the monomial expansion.
    CHECK(rhs::frobenius_coefficients(n, in, 0, 2) == rhs::higher_bernoulli_coefficients(n, in, 0));
    for (std::size_t s = 0; s <= 3; ++s) {
      for (const Rational lambda : {Rational(2), Rational(-1), Rational(1, 3)}) CHECK(verify_frobenius(n, in, s, lambda).equal);
      CHECK(verify_higher_bernoulli(n, in, s).equal);
    }
  }
  CHECK_THROWS_AS(verify_frobenius(2, in, 1, 1), InvalidParamsError);
}

TEST_CASE("reports carry their parameters") {
  const auto r = verify_frobenius(3, kKey, 2, Rational(1, 3));
  CHECK(r.id == TheoremId::T8);
  CHECK(r.params.n == 3);
  CHECK(r.params.s == 2u);
  CHECK(r.params.lambda == Rational(1, 3));
  CHECK(r.params.key == kKey);
  CHECK(to_string(TheoremId::T4remark) == "T4remark");
}
