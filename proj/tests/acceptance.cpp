// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// usage: acceptance <path-to-umbral-mix> <golden-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "umbral/errors.hpp"
#include "umbral/grid.hpp"
#include "umbral/records.hpp"

using namespace umbral;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

/// Reports of the requested suite on the standard grid, computed once.
const std::vector<IdentityReport>& standard(Suite suite) {
  static std::map<Suite, std::vector<IdentityReport>> cache;
  auto it = cache.find(suite);
  if (it == cache.end()) it = cache.emplace(suite, run_suite(suite, GridSpec{}, 1)).first;
  return it->second;
}

Outcome all_equal(const std::vector<IdentityReport>& reports, const std::function<bool(const IdentityReport&)>& filter = {}) {
  std::size_t total = 0, failed = 0;
  std::string first;
  for (const auto& r : reports) {
    if (filter && !filter(r)) continue;
    ++total;
    if (!r.equal) {
      if (!failed) first = to_json(r).dump().substr(0, 200);
      ++failed;
    }
  }
  Outcome o;
  o.pass = failed == 0 && total > 0;
  o.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " reports equal";
  if (failed) o.detail += "; first failure " + first;
  return o;
}

Outcome combine(std::initializer_list<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

/// Counts property checks and failures.
struct Tally {
  std::size_t checks = 0, failures = 0;
  void expect(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  Outcome outcome(const std::string& what) const {
    return {failures == 0, std::to_string(checks - failures) + "/" + std::to_string(checks) + " " + what};
  }
};

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto& reports = standard(Suite::T1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto o = all_equal(reports);
  // Each of the five forms must be present at every grid point.
  std::map<TheoremId, std::size_t> per_form;
  for (const auto& r : reports) ++per_form[r.id];
  const std::size_t points = grid_keys(GridSpec{}).size() * 11;
  for (auto id : {TheoremId::T1a, TheoremId::T1b, TheoremId::T1c, TheoremId::T1d, TheoremId::T1e}) {
    if (per_form[id] != points) o.pass = false;
  }
  o.pass = o.pass && secs < 60.0;
  std::ostringstream s;
  s << o.detail << "; " << secs << " s single-threaded (limit 60 s)";
  o.detail = s.str();
  return o;
}

Outcome criterion2() {
  const auto& reports = standard(Suite::T2);
  auto o = all_equal(reports);
  std::set<std::string> ys;
  for (const auto& r : reports) ys.insert(to_string(*r.params.y));
  o.pass = o.pass && ys == std::set<std::string>{"1", "-1", "1/2"};
  return o;
}

Outcome criterion3() {
  return combine({all_equal(standard(Suite::T3)), all_equal(standard(Suite::T4))});
}

Outcome criterion4() {
  // Cap pinned to n + 2 for every n.
  std::size_t total = 0, failed = 0;
  for (const auto& key : grid_keys(GridSpec{})) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto in = Ingredients::with_cap(key, n + 2);
      ++total;
      if (!verify_number_relation(n, in).equal) ++failed;
    }
  }
  return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " scalar reports equal at cap n+2"};
}

Outcome criterion5() {
  Outcome o = combine({all_equal(standard(Suite::T6)), all_equal(standard(Suite::T7)), all_equal(standard(Suite::T8)),
                       all_equal(standard(Suite::T9))});
  std::size_t crossed = 0;
  for (auto s : {Suite::T6, Suite::T7}) {
    for (const auto& r : standard(s)) {
      if (!r.cross_check || r.cross_check->method.rfind("connection_coefficients", 0) != 0 || !r.cross_check->agrees) {
        o.pass = false;
      }
      ++crossed;
    }
  }
  o.detail += "; " + std::to_string(crossed) + " falling/rising rows match connection_coefficients";
  return o;
}

Outcome criterion6() {
  using namespace testing;
  Tally tally;
  for (std::size_t k = 0; k <= 10; ++k) {
    for (std::size_t n = 0; n <= 10; ++n) {
      const Rational expected = n == k ? Rational(factorial(static_cast<unsigned>(n))) : Rational(0);
      tally.expect(functional_apply(TruncatedSeries::monomial(k, 10), Polynomial::monomial(n)) == expected);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_series(10), g = random_series(10);
    const auto p = random_polynomial(static_cast<std::size_t>(trial % 11));
    tally.expect(functional_apply(f * g, p) == functional_apply(f, operator_apply(g, p)));
    const auto y = random_rational();
    tally.expect(operator_apply(exp_scaled(y, 10), p) == shift(p, y));
    const auto x = random_rational();
    tally.expect(shift(p, y).evaluate(x) == p.evaluate(x + y));
  }
  const MixedFamilyKey key{BarnesParams({Rational(1, 2), 3}), -2};
  const std::vector<AppellDescriptor> kernels = {poly_bernoulli_descriptor(key.k, 14), barnes_descriptor(key.params, 14),
                                                 mixed_descriptor(key, 14)};
  for (const auto& d : kernels) {
    const AppellSequence seq(d);
    for (std::size_t n = 1; n <= 12; ++n) {
      tally.expect(operator_apply(TruncatedSeries::monomial(1, 14), seq.polynomial(n)) ==
                   Rational(static_cast<unsigned long>(n)) * seq.polynomial(n - 1));
    }
    for (std::size_t k = 0; k <= 10; ++k) {
      const auto functional = d.g * TruncatedSeries::monomial(k, d.g.cap());
      for (std::size_t n = 0; n <= 10; ++n) {
        const Rational expected = n == k ? Rational(factorial(static_cast<unsigned>(n))) : Rational(0);
        tally.expect(functional_apply(functional, seq.polynomial(n)) == expected);
      }
    }
  }
  return tally.outcome("umbral property checks");
}

Outcome criterion7() {
  using testing::classical_bernoulli;
  Tally tally;
  const auto b = testing::bernoulli_by_recurrence(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    tally.expect(poly_bernoulli_poly(n, 1) == shift(classical_bernoulli(n), 1));
    tally.expect(barnes_bernoulli_poly(n, BarnesParams({1})) == classical_bernoulli(n));
    Polynomial order_two;
    for (std::size_t i = 0; i <= n; ++i) {
      order_two += Rational(binomial(static_cast<long>(n), static_cast<long>(i)) * b[n - i]) * classical_bernoulli(i);
    }
    tally.expect(mixed_poly(n, {BarnesParams({1}), 1}) == shift(order_two, 1));
    tally.expect(barnes_bernoulli_poly(n, BarnesParams({2})) ==
                 pow(Rational(2), static_cast<long>(n) - 1) * testing::scale_argument(classical_bernoulli(n), Rational(1, 2)));
  }
  return tally.outcome("cross-family identities");
}

Outcome criterion8() {
  const auto negative = [](const IdentityReport& r) { return r.params.key.k <= 0; };
  std::vector<Outcome> parts;
  for (auto s : {Suite::T1, Suite::T2, Suite::T3, Suite::T4, Suite::T5, Suite::T6, Suite::T7, Suite::T8, Suite::T9}) {
    parts.push_back(all_equal(standard(s), negative));
  }
  Outcome o;
  std::size_t total = 0;
  for (const auto& p : parts) {
    o.pass = o.pass && p.pass;
    total += std::stoul(p.detail.substr(p.detail.find('/') + 1));
  }
  // Criterion 4 at its pinned cap, restricted to k <= 0.
  for (const auto& key : grid_keys(GridSpec{})) {
    if (key.k > 0) continue;
    for (std::size_t n = 0; n <= 10; ++n) {
      ++total;
      if (!verify_number_relation(n, Ingredients::with_cap(key, n + 2)).equal) o.pass = false;
    }
  }
  o.detail = std::to_string(total) + " reports with k in {-2,-1,0} checked";
  return o;
}

/// Number of failing reports for every verifier at n <= max_n.
std::size_t failures(const Ingredients& in, std::size_t max_n) {
  std::size_t bad = 0;
  const auto count = [&](const IdentityReport& r) { bad += r.equal ? 0 : 1; };
  try {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (const auto& r : verify_explicit(n, in)) count(r);
      for (const Rational y : {Rational(1), Rational(-1), Rational(1, 2)}) count(verify_sheffer(n, in, Rational(3, 2), y));
      count(verify_recurrence(n, in));
      if (n >= 1) {
        for (const auto& r : verify_more_relation(n, in)) count(r);
      }
      count(verify_number_relation(n, in));
      count(verify_falling(n, in));
      count(verify_rising(n, in));
      for (std::size_t s = 0; s <= 3; ++s) {
        for (const Rational lambda : {Rational(2), Rational(-1), Rational(1, 3)}) count(verify_frobenius(n, in, s, lambda));
        count(verify_higher_bernoulli(n, in, s));
      }
    }
  } catch (const Error&) {
    ++bad;
  }
  return bad;
}

Outcome criterion9() {
  constexpr std::size_t N = 6;
  const std::vector<MixedFamilyKey> keys = {{BarnesParams({1, 2}), -1}, {BarnesParams({2, 2, 1}), 2}};
  std::size_t mutations = 0, undetected = 0;
  std::string first;
  for (const auto& key : keys) {
    const Ingredients base(key, N + 1);
    if (failures(base, N) != 0) return {false, "unperturbed ingredients already fail"};
    const auto check = [&](const std::string& what, const std::function<void(Ingredients&)>& mutate) {
      Ingredients in = base;
      mutate(in);
      ++mutations;
      if (failures(in, N) == 0) {
        if (!undetected) first = what;
        ++undetected;
      }
    };
    for (std::size_t i = 1; i <= N + 1; ++i) check("B_" + std::to_string(i), [i](Ingredients& in) { in.perturb_bernoulli(i, 1); });
    for (std::size_t l = 0; l <= N; ++l) {
      for (std::size_t m = 0; m <= l; ++m) {
        check("S2(" + std::to_string(l) + "," + std::to_string(m) + ")", [=](Ingredients& in) { in.perturb_stirling(l, m, 1); });
      }
    }
    for (std::size_t s = 1; s <= 3; ++s) {
      for (std::size_t l = N + 1; l <= N + s; ++l) {
        check("S2(" + std::to_string(l) + "," + std::to_string(s) + ")", [=](Ingredients& in) { in.perturb_stirling(l, s, 1); });
      }
    }
    using K = Ingredients::Kernel;
    for (std::size_t i = 0; i <= N; ++i) {
      check("barnes kernel t^" + std::to_string(i), [i](Ingredients& in) { in.perturb_kernel(K::Barnes, i, 1); });
      check("extended barnes kernel t^" + std::to_string(i), [i](Ingredients& in) { in.perturb_kernel(K::BarnesExtended, i, 1); });
    }
    for (std::size_t i = 1; i <= N + 1; ++i) {
      check("Li_k t^" + std::to_string(i), [i](Ingredients& in) { in.perturb_kernel(K::Polylog, i, 1); });
      check("Li_{k-1} t^" + std::to_string(i), [i](Ingredients& in) { in.perturb_kernel(K::PolylogPrev, i, 1); });
    }
  }
  Outcome o{undetected == 0, std::to_string(mutations - undetected) + "/" + std::to_string(mutations) + " mutations detected"};
  if (undetected) o.detail += "; first undetected " + first;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_command(const std::string& cmd, std::string* out) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    if (out) out->append(buf, got);
  }
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion10(const std::string& cli, const std::string& golden_dir) {
  const int verify_status = run_command("\"" + cli + "\" verify --suite all --jobs 1 2>/dev/null", nullptr);
  std::string table;
  const int table_status = run_command("\"" + cli + "\" table --family barnes --n 0..4 --a 1", &table);
  const bool golden = table == read_file(golden_dir + "/table_barnes_a1_n0-4.jsonl");
  return {verify_status == 0 && table_status == 0 && golden,
          "verify --suite all exit " + std::to_string(verify_status) + "; barnes golden " + (golden ? "matches" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <umbral-mix> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden_dir = argv[2];

  const std::vector<Criterion> criteria = {
      {1, "explicit forms T1a-T1e on the standard grid", criterion1},
      {2, "Sheffer identity for y0 in {1,-1,1/2}", criterion2},
      {3, "both recurrences and the re-indexed form", criterion3},
      {4, "number relation at cap n+2", criterion4},
      {5, "factorial, Frobenius-Euler and higher-order Bernoulli expansions", criterion5},
      {6, "umbral axioms as property suites", criterion6},
      {7, "cross-family oracles, n <= 8", criterion7},
      {8, "negative-k coverage", criterion8},
      {9, "mutation sanity", criterion9},
      {10, "CLI contract", [&] { return criterion10(cli, golden_dir); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " -- " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
