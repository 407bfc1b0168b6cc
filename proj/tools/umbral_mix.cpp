// umbral-mix: tables of the mixed-type polynomial families and identity
// verification sweeps. JSON lines or CSV on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 1 some identity failed, 2 usage or parameter error.

#include <cstdlib>
#include <iostream>
#include <tuple>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "umbral/errors.hpp"
#include "umbral/grid.hpp"
#include "umbral/records.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw umbral::ParseError("invalid integer '" + s + "'");
  }
  if (used != s.size()) throw umbral::ParseError("invalid integer '" + s + "'");
  return v;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_long(part));
  return out;
}

unsigned resolve_jobs(unsigned flag_jobs) {
  if (const char* env = std::getenv("UMBRAL_MIX_JOBS"); env && *env) {
    const long v = parse_long(env);
    if (v < 1) throw umbral::InvalidParamsError("UMBRAL_MIX_JOBS must be positive");
    return static_cast<unsigned>(v);
  }
  return flag_jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : flag_jobs;
}

struct TableArgs {
  std::string family;
  std::string n = "0..5";
  std::string r;
  std::string k = "1";
  std::string a = "1";
  std::string s = "1";
  std::string lambda = "-1";
  std::string format = "json";
};

struct VerifyArgs {
  std::string suite = "all";
  std::string max_n;
  std::string r_list, k_list, a_sets, s_list, lambda_list;
  unsigned jobs = 1;
  std::string format = "json";
};

int run_table(const TableArgs& args) {
  umbral::TableRequest req;
  req.family = args.family;
  std::tie(req.n_lo, req.n_hi) = umbral::parse_range(args.n);
  if (!args.r.empty()) req.r = parse_long(args.r);
  req.k = parse_long(args.k);
  req.a = umbral::parse_rational_list(args.a);
  const long s = parse_long(args.s);
  if (s < 0) throw umbral::InvalidParamsError("s must be non-negative");
  req.s = static_cast<std::size_t>(s);
  req.lambda = umbral::parse_rational(args.lambda);

  const auto records = umbral::table_records(req);
  if (args.format == "csv") {
    std::cout << umbral::table_csv_header() << '\n';
    for (const auto& rec : records) {
      for (const auto& row : umbral::to_csv_rows(rec)) std::cout << row << '\n';
    }
  } else {
    for (const auto& rec : records) std::cout << umbral::to_json(rec).dump() << '\n';
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const auto suite = umbral::parse_suite(args.suite);
  umbral::GridSpec grid;
  if (!args.max_n.empty()) {
    const long v = parse_long(args.max_n);
    if (v < 0) throw umbral::InvalidParamsError("max-n must be non-negative");
    grid.max_n = static_cast<std::size_t>(v);
  }
  if (!args.r_list.empty()) grid.r_list = parse_long_list(args.r_list);
  if (!args.k_list.empty()) grid.k_list = parse_long_list(args.k_list);
  if (!args.a_sets.empty()) {
    grid.a_sets.clear();
    for (const auto& set : split(args.a_sets, ';')) grid.a_sets.push_back(umbral::parse_rational_list(set));
  }
  if (!args.s_list.empty()) {
    grid.s_list.clear();
    for (long s : parse_long_list(args.s_list)) {
      if (s < 0) throw umbral::InvalidParamsError("s must be non-negative");
      grid.s_list.push_back(static_cast<std::size_t>(s));
    }
  }
  if (!args.lambda_list.empty()) grid.lambda_list = umbral::parse_rational_list(args.lambda_list);
  if (umbral::grid_keys(grid).empty()) throw umbral::InvalidParamsError("the grid has no (r, a) combinations");

  const auto reports = umbral::run_suite(suite, grid, resolve_jobs(args.jobs));
  if (args.format == "csv") {
    std::cout << umbral::report_csv_header() << '\n';
    for (const auto& r : reports) std::cout << umbral::to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) std::cout << umbral::to_json(r).dump() << '\n';
  }
  const auto summary = umbral::summarize(reports);
  std::cerr << "verified " << summary.total << " reports: " << summary.passed << " passed, " << summary.failed
            << " failed\n";
  return summary.failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables and identity checks for Barnes-type multiple Bernoulli and poly-Bernoulli polynomials",
               "umbral-mix"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Emit polynomial or number tables");
  table_cmd->add_option("--family", table.family, "Family to tabulate")
      ->required()
      ->check(CLI::IsMember({"mixed", "poly-bernoulli", "barnes", "frobenius-euler", "higher-bernoulli",
                             "bernoulli-numbers", "stirling2"}));
  table_cmd->add_option("--n", table.n, "Degree or range lo..hi");
  table_cmd->add_option("--r", table.r, "Number of Barnes parameters (checked against --a)");
  table_cmd->add_option("--k", table.k, "Polylogarithm index (any integer)");
  table_cmd->add_option("--a", table.a, "Comma-separated Barnes parameters");
  table_cmd->add_option("--s", table.s, "Order for frobenius-euler and higher-bernoulli");
  table_cmd->add_option("--lambda", table.lambda, "Frobenius-Euler parameter, must differ from 1");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the identities over a parameter grid");
  verify_cmd->add_option("--suite", verify.suite, "all or t1..t9");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest degree for every theorem");
  verify_cmd->add_option("--r-list", verify.r_list);
  verify_cmd->add_option("--k-list", verify.k_list);
  verify_cmd->add_option("--a-sets", verify.a_sets, "Semicolon-separated sets, e.g. \"1;1,2;1/2,3\"");
  verify_cmd->add_option("--s-list", verify.s_list);
  verify_cmd->add_option("--lambda-list", verify.lambda_list);
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0 = hardware concurrency)");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table_cmd) return run_table(table);
    return run_verify(verify);
  } catch (const umbral::Error& e) {
    std::cerr << "umbral-mix: " << e.what() << '\n';
    return kExitUsage;
  }
}
