#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "umbral/identities.hpp"

namespace umbral {

enum class Suite { All, T1, T2, T3, T4, T5, T6, T7, T8, T9 };

/// Throws InvalidParamsError for an unknown suite name ("all", "t1".."t9").
Suite parse_suite(std::string_view name);

/// Enumerated verification grid. The defaults are the standard grid.
struct GridSpec {
  /// Overrides both degree limits when set.
  std::optional<std::size_t> max_n;
  std::size_t default_max_n = 10;
  /// Degree limit for the Frobenius-Euler and higher-order Bernoulli expansions.
  std::size_t default_max_n_basis = 8;
  std::vector<long> r_list{1, 2, 3};
  std::vector<long> k_list{-2, -1, 0, 1, 2, 3};
  std::vector<std::vector<Rational>> a_sets{{1}, {1, 2}, {Rational(1, 2), 3}, {2, 2, 1}};
  std::vector<std::size_t> s_list{0, 1, 2, 3};
  std::vector<Rational> lambda_list{2, -1, Rational(1, 3)};
  std::vector<Rational> y_list{1, -1, Rational(1, 2)};
  Rational x0{3, 2};

  std::size_t degree_limit() const { return max_n.value_or(default_max_n); }
  std::size_t basis_degree_limit() const { return max_n.value_or(default_max_n_basis); }
};

/// Checks every parameter (r >= 1, a_j != 0, lambda != 1) and throws
/// InvalidParamsError on the first violation.
void validate(const GridSpec& grid);

/// Keys in enumeration order: for each r, for each a-set with at least r
/// entries, the first r entries; for each k. Duplicates are dropped.
std::vector<MixedFamilyKey> grid_keys(const GridSpec& grid);

/// Runs the suite on the grid with up to `jobs` worker threads. The result is
/// sorted by theorem id, then by grid enumeration order, independent of jobs.
std::vector<IdentityReport> run_suite(Suite suite, const GridSpec& grid, unsigned jobs = 1);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace umbral
