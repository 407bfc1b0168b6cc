#pragma once

// Machine-readable output records: JSON lines and CSV. Rationals always
// serialize as canonical "p/q" strings (or "p" when q = 1), never as floats.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "umbral/identities.hpp"

namespace umbral {

using Json = nlohmann::ordered_json;

/// Dense ascending-power coefficient array; the zero polynomial is [].
Json to_json(const Polynomial& p);
Json to_json(const IdentityReport& r);

/// Inverse of to_json for coefficient arrays. Throws ParseError.
Polynomial polynomial_from_json(const Json& j);

enum class PayloadKind { Coefficients, Value, Row };

struct TableRecord {
  std::string family;
  std::size_t n = 0;
  /// Object of scalars and arrays of rational strings.
  Json params = Json::object();
  PayloadKind kind = PayloadKind::Coefficients;
  std::vector<Rational> payload;
};

struct TableRequest {
  std::string family;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::optional<long> r;
  std::vector<Rational> a{1};
  long k = 1;
  std::size_t s = 1;
  Rational lambda = -1;
};

/// Families: mixed, poly-bernoulli, barnes, frobenius-euler, higher-bernoulli,
/// bernoulli-numbers, stirling2. Throws InvalidParamsError on bad parameters.
std::vector<TableRecord> table_records(const TableRequest& req);

Json to_json(const TableRecord& rec);

/// CSV header and rows (one row per payload entry).
std::string table_csv_header();
std::vector<std::string> to_csv_rows(const TableRecord& rec);
std::string report_csv_header();
std::string to_csv_row(const IdentityReport& r);

/// Parses "a..b" or "a" into an inclusive range. Throws ParseError.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace umbral
