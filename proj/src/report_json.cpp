#include "hypheat/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypheat {

using nlohmann::json;

namespace {

json envelope(const char* kind) {
  return json{{"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

// JSON has no infinities; keep them readable instead of collapsing to null.
json number(double v) {
  if (v == 0.0) return 0.0;  // drop the sign of -0
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json violation_json(const Violation& v, const std::string& mode) {
  json j{{"dim", v.dim}, {"t", number(v.t)}, {"r", number(v.r)},
         {"slack", number(v.slack)}, {"rhs", number(v.rhs)}};
  if (v.trial >= 0) j["trial"] = v.trial;
  if (mode == "harnack") j["t2"] = number(v.t2);
  return j;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const KernelEval& k, const AlphaEval& a) {
  json j = envelope("kernel");
  j["dim"] = k.dim;
  j["t"] = number(k.t);
  j["r"] = number(k.r);
  j["log_k"] = number(k.log_k);
  j["dr_log_k"] = number(k.dr_log_k);
  j["dt_log_k"] = number(k.dt_log_k);
  j["alpha"] = number(a.alpha);
  j["log_alpha"] = number(a.log_alpha);
  j["dr_log_alpha"] = number(a.dr_log_alpha);
  j["dt_log_alpha"] = number(a.dt_log_alpha);
  j["method"] = std::string(to_string(k.method));
  return j;
}

json to_json(const VerificationReport& r) {
  json j = envelope("verification");
  j["estimate"] = r.estimate;
  j["mode"] = r.mode;
  j["tolerance"] = r.tolerance;
  j["total_points"] = r.total_points;
  j["violation_count"] = r.violations.size();
  j["passed"] = r.passed();
  j["min_slack"] = number(r.min_slack);
  j["max_abs_equality_gap"] = number(r.max_abs_equality_gap);
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(violation_json(v, r.mode));
  j["violations"] = std::move(vs);
  return j;
}

json to_json(const std::vector<VerificationReport>& reports) {
  json j = envelope("verification_set");
  bool passed = true;
  json items = json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    json item = to_json(r);
    item.erase("schema_version");
    item.erase("kind");
    items.push_back(std::move(item));
  }
  j["passed"] = passed;
  j["reports"] = std::move(items);
  return j;
}

json to_json(const SeriesReport& r) {
  json j = envelope("series");
  j["argument"] = r.argument;
  j["order"] = r.order;
  j["passed"] = r.pass;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"k", row.k},
                        {"coefficient_numerator", row.numerator.str()},
                        {"coefficient_denominator", row.denominator.str()},
                        {"sign", row.sign},
                        {"inner", row.inner.str()},
                        {"pass", row.pass}});
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const DominanceReport& r) {
  json j = envelope("dominance");
  j["bound"] = r.bound;
  j["passed"] = r.pass;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(
        json{{"k", row.k}, {"chain", row.chain}, {"margin", row.margin.str()}, {"pass", row.pass}});
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const ConcavityReport& r) {
  json j = envelope("concavity");
  j["passed"] = r.pass;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"t", row.t},
                        {"max_second_difference", number(row.max_second_difference)},
                        {"max_d2y_dx2", number(row.max_d2y_dx2)},
                        {"max_relative_mismatch", number(row.max_relative_mismatch)},
                        {"small_r_d2y_dx2", number(row.small_r_d2y_dx2)},
                        {"pass", row.pass}});
  }
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const ComparisonTable& t) {
  json j = envelope("comparison");
  j["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json slack = json::object();
    json errors = json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      slack[t.columns[c]] = row.slack[c] ? number(*row.slack[c]) : json(nullptr);
      if (!row.errors[c].empty()) errors[t.columns[c]] = row.errors[c];
    }
    json item{{"dim", row.dim}, {"t", row.t}, {"r", row.r}, {"slack", std::move(slack)}};
    if (!errors.empty()) item["errors"] = std::move(errors);
    rows.push_back(std::move(item));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_csv(const ComparisonTable& t) {
  std::ostringstream out;
  out << "dim,t,r";
  for (const auto& c : t.columns) out << ',' << c;
  out << '\n';
  for (const auto& row : t.rows) {
    out << row.dim << ',' << fmt(row.t) << ',' << fmt(row.r);
    for (const auto& s : row.slack) {
      out << ',';
      if (s) out << fmt(*s);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hypheat
