#include "umbral/grid.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include "umbral/errors.hpp"

namespace umbral {

Suite parse_suite(std::string_view name) {
  static constexpr std::pair<std::string_view, Suite> table[] = {
      {"all", Suite::All}, {"t1", Suite::T1}, {"t2", Suite::T2}, {"t3", Suite::T3}, {"t4", Suite::T4},
      {"t5", Suite::T5},   {"t6", Suite::T6}, {"t7", Suite::T7}, {"t8", Suite::T8}, {"t9", Suite::T9}};
  for (const auto& [n, s] : table) {
    if (n == name) return s;
  }
  throw InvalidParamsError("unknown suite '" + std::string(name) + "'");
}

void validate(const GridSpec& grid) {
  for (long r : grid.r_list) {
    if (r <= 0) throw InvalidParamsError("r must be positive");
  }
  for (const auto& a : grid.a_sets) BarnesParams{a};
  for (const auto& l : grid.lambda_list) {
    if (l == 1) throw InvalidParamsError("lambda must differ from 1");
  }
}

std::vector<MixedFamilyKey> grid_keys(const GridSpec& grid) {
  validate(grid);
  std::vector<BarnesParams> params;
  for (long r : grid.r_list) {
    for (const auto& a : grid.a_sets) {
      if (a.size() < static_cast<std::size_t>(r)) continue;
      BarnesParams p(std::vector<Rational>(a.begin(), a.begin() + r));
      if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(std::move(p));
    }
  }
  std::vector<MixedFamilyKey> keys;
  for (const auto& p : params) {
    for (long k : grid.k_list) {
      MixedFamilyKey key{p, k};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(std::move(key));
    }
  }
  return keys;
}

namespace {

bool includes(Suite suite, Suite part) { return suite == Suite::All || suite == part; }

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<IdentityReport> run_suite(Suite suite, const GridSpec& grid, unsigned jobs) {
  const auto keys = grid_keys(grid);
  const std::size_t max_n = grid.degree_limit();
  const std::size_t max_basis = grid.basis_degree_limit();
  const std::size_t max_s = grid.s_list.empty() ? 0 : *std::max_element(grid.s_list.begin(), grid.s_list.end());

  std::vector<std::optional<Ingredients>> ingredients(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) {
    // One extra degree for the first recurrence, which reaches S_{n+1}.
    ingredients[i].emplace(keys[i], std::max(max_n, max_basis) + 1, max_s);
  });

  using Task = std::function<std::vector<IdentityReport>()>;
  std::vector<Task> tasks;
  for (std::size_t ki = 0; ki < keys.size(); ++ki) {
    const Ingredients& in = *ingredients[ki];
    for (std::size_t n = 0; n <= max_n; ++n) {
      if (includes(suite, Suite::T1)) tasks.push_back([&in, n] { return verify_explicit(n, in); });
      if (includes(suite, Suite::T2)) {
        for (const auto& y : grid.y_list) {
          tasks.push_back([&in, n, y, x0 = grid.x0] { return std::vector{verify_sheffer(n, in, x0, y)}; });
        }
      }
      if (includes(suite, Suite::T3)) tasks.push_back([&in, n] { return std::vector{verify_recurrence(n, in)}; });
      if (includes(suite, Suite::T4) && n >= 1) tasks.push_back([&in, n] { return verify_more_relation(n, in); });
      if (includes(suite, Suite::T5)) tasks.push_back([&in, n] { return std::vector{verify_number_relation(n, in)}; });
      if (includes(suite, Suite::T6)) tasks.push_back([&in, n] { return std::vector{verify_falling(n, in)}; });
      if (includes(suite, Suite::T7)) tasks.push_back([&in, n] { return std::vector{verify_rising(n, in)}; });
    }
    for (std::size_t n = 0; n <= max_basis; ++n) {
      for (std::size_t s : grid.s_list) {
        if (includes(suite, Suite::T8)) {
          for (const auto& lambda : grid.lambda_list) {
            tasks.push_back([&in, n, s, lambda] { return std::vector{verify_frobenius(n, in, s, lambda)}; });
          }
        }
        if (includes(suite, Suite::T9)) {
          tasks.push_back([&in, n, s] { return std::vector{verify_higher_bernoulli(n, in, s)}; });
        }
      }
    }
  }

  std::vector<std::vector<IdentityReport>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { results[i] = tasks[i](); });

  std::vector<IdentityReport> out;
  for (auto& r : results) {
    for (auto& report : r) out.push_back(std::move(report));
  }
  std::stable_sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) { return a.id < b.id; });
  return out;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  s.total = reports.size();
  s.passed = static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.equal; }));
  s.failed = s.total - s.passed;
  return s;
}

}  // namespace umbral
