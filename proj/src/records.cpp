#include "umbral/records.hpp"

#include <charconv>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

Json rationals_json(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& q : values) arr.push_back(to_string(q));
  return arr;
}

std::string join(std::span<const Rational> values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += to_string(values[i]);
  }
  return s;
}

Json value_json(const ReportValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return to_json(*p);
  return to_string(std::get<Rational>(v));
}

std::string value_csv(const ReportValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return join(p->coeffs(), '|');
  return to_string(std::get<Rational>(v));
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParseError("invalid degree '" + s + "'");
  return v;
}

}  // namespace

Json to_json(const Polynomial& p) { return rationals_json(p.coeffs()); }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient payload must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("coefficients must be rational strings");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  return Polynomial(std::move(c));
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["theorem"] = std::string(to_string(r.id));
  j["n"] = r.params.n;
  j["r"] = r.params.key.r();
  j["k"] = r.params.key.k;
  j["a"] = rationals_json(r.params.key.params.a());
  if (r.params.y) j["y"] = to_string(*r.params.y);
  if (r.params.x0) j["x0"] = to_string(*r.params.x0);
  if (r.params.s) j["s"] = *r.params.s;
  if (r.params.lambda) j["lambda"] = to_string(*r.params.lambda);
  j["kind"] = std::holds_alternative<Polynomial>(r.lhs) ? "polynomial" : "scalar";
  j["lhs"] = value_json(r.lhs);
  j["rhs"] = value_json(r.rhs);
  j["equal"] = r.equal;
  if (r.first_diff) {
    j["first_diff"] = {{"index", r.first_diff->index},
                       {"lhs", to_string(r.first_diff->lhs)},
                       {"rhs", to_string(r.first_diff->rhs)}};
  } else {
    j["first_diff"] = nullptr;
  }
  if (r.cross_check) {
    j["cross_check"] = {{"method", r.cross_check->method}, {"agrees", r.cross_check->agrees}};
  } else {
    j["cross_check"] = nullptr;
  }
  return j;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_size(text);
    return {v, v};
  }
  const auto lo = parse_size(text.substr(0, dots));
  const auto hi = parse_size(text.substr(dots + 2));
  if (lo > hi) throw ParseError("empty degree range '" + text + "'");
  return {lo, hi};
}

std::vector<TableRecord> table_records(const TableRequest& req) {
  std::vector<TableRecord> out;

  if (req.family == "bernoulli-numbers") {
    const auto b = bernoulli_numbers(req.n_hi);
    for (std::size_t n = req.n_lo; n <= req.n_hi; ++n) out.push_back({req.family, n, Json::object(), PayloadKind::Value, {b[n]}});
    return out;
  }
  if (req.family == "stirling2") {
    const auto table = stirling2_table(req.n_hi);
    for (std::size_t l = req.n_lo; l <= req.n_hi; ++l) {
      std::vector<Rational> row(table[l].begin(), table[l].end());
      out.push_back({req.family, l, Json::object(), PayloadKind::Row, std::move(row)});
    }
    return out;
  }

  const std::size_t cap = req.n_hi + kCapGuard;
  std::optional<AppellDescriptor> d;
  Json params = Json::object();
  if (req.family == "mixed") {
    if (req.r && *req.r <= 0) throw InvalidParamsError("r must be positive");
    BarnesParams p(req.a);
    if (req.r && static_cast<std::size_t>(*req.r) != p.r()) {
      throw InvalidParamsError("r does not match the number of a parameters");
    }
    d = mixed_descriptor({p, req.k}, cap);
    params["r"] = p.r();
    params["k"] = req.k;
    params["a"] = rationals_json(p.a());
  } else if (req.family == "poly-bernoulli") {
    d = poly_bernoulli_descriptor(req.k, cap);
    params["k"] = req.k;
  } else if (req.family == "barnes") {
    if (req.r && *req.r <= 0) throw InvalidParamsError("r must be positive");
    BarnesParams p(req.a);
    if (req.r && static_cast<std::size_t>(*req.r) != p.r()) {
      throw InvalidParamsError("r does not match the number of a parameters");
    }
    d = barnes_descriptor(p, cap);
    params["a"] = rationals_json(p.a());
  } else if (req.family == "frobenius-euler") {
    d = frobenius_euler_descriptor(req.s, req.lambda, cap);
    params["s"] = req.s;
    params["lambda"] = to_string(req.lambda);
  } else if (req.family == "higher-bernoulli") {
    d = higher_bernoulli_descriptor(req.s, cap);
    params["s"] = req.s;
  } else {
    throw InvalidParamsError("unknown family '" + req.family + "'");
  }
  const AppellSequence seq(*d);
  for (std::size_t n = req.n_lo; n <= req.n_hi; ++n) {
    const auto p = seq.polynomial(n);
    out.push_back({req.family, n, params, PayloadKind::Coefficients, {p.coeffs().begin(), p.coeffs().end()}});
  }
  return out;
}

Json to_json(const TableRecord& rec) {
  Json j;
  j["family"] = rec.family;
  j["n"] = rec.n;
  j["params"] = rec.params;
  switch (rec.kind) {
    case PayloadKind::Coefficients: j["coeffs"] = rationals_json(rec.payload); break;
    case PayloadKind::Value: j["value"] = to_string(rec.payload.at(0)); break;
    case PayloadKind::Row: j["row"] = rationals_json(rec.payload); break;
  }
  return j;
}

std::string table_csv_header() { return "family,n,params,index,value"; }

std::vector<std::string> to_csv_rows(const TableRecord& rec) {
  std::string params;
  for (const auto& item : rec.params.items()) {
    const auto& v = item.value();
    if (!params.empty()) params += ' ';
    params += item.key() + "=";
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) params += (i ? "|" : "") + v[i].get<std::string>();
    } else if (v.is_string()) {
      params += v.get<std::string>();
    } else {
      params += v.dump();
    }
  }
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < rec.payload.size(); ++i) {
    rows.push_back(rec.family + "," + std::to_string(rec.n) + "," + params + "," + std::to_string(i) + "," +
                   to_string(rec.payload[i]));
  }
  return rows;
}

std::string report_csv_header() { return "theorem,n,params,kind,equal,lhs,rhs"; }

std::string to_csv_row(const IdentityReport& r) {
  std::string params = "r=" + std::to_string(r.params.key.r()) + " k=" + std::to_string(r.params.key.k) +
                       " a=" + join(r.params.key.params.a(), '|');
  if (r.params.y) params += " y=" + to_string(*r.params.y);
  if (r.params.x0) params += " x0=" + to_string(*r.params.x0);
  if (r.params.s) params += " s=" + std::to_string(*r.params.s);
  if (r.params.lambda) params += " lambda=" + to_string(*r.params.lambda);
  return std::string(to_string(r.id)) + "," + std::to_string(r.params.n) + "," + params + "," +
         (std::holds_alternative<Polynomial>(r.lhs) ? "polynomial" : "scalar") + "," + (r.equal ? "true" : "false") +
         "," + value_csv(r.lhs) + "," + value_csv(r.rhs);
}

}  // namespace umbral
