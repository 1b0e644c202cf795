#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace hypnorm::cli {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

nlohmann::ordered_json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

nlohmann::ordered_json to_json(const std::map<std::string, double>& m) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m) obj[k] = real(v);
  return obj;
}

std::string flatten(const std::map<std::string, double>& m, std::string (*fmt)(double)) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ';';
    out += k + '=' + fmt(v);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

ReportRecord make(std::string suite, std::string scenario, std::map<std::string, double> inputs, double closed,
                  std::map<std::string, double> routes) {
  ReportRecord r;
  r.suite = std::move(suite);
  r.scenario = std::move(scenario);
  r.inputs = std::move(inputs);
  r.closed_form = closed;
  r.numeric_routes = std::move(routes);
  return r;
}

void emit_json(const std::vector<ReportRecord>& records, std::ostream& out) {
  auto root = nlohmann::ordered_json::object();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["scenario"] = r.scenario;
    obj["inputs"] = to_json(r.inputs);
    obj["closed_form"] = real(r.closed_form);
    obj["numeric_routes"] = to_json(r.numeric_routes);
    obj["rel_errors"] = to_json(r.rel_errors);
    obj["status"] = to_string(r.status);
    obj["note"] = r.note;
    if (!root.contains(r.suite)) root[r.suite] = nlohmann::ordered_json::array();
    root[r.suite].push_back(std::move(obj));
  }
  out << root.dump(2) << '\n';
}

void emit_csv(const std::vector<ReportRecord>& records, std::ostream& out) {
  out << "suite,scenario,status,closed_form,inputs,numeric_routes,rel_errors,note\n";
  for (const auto& r : records) {
    out << csv_quote(r.suite) << ',' << csv_quote(r.scenario) << ',' << to_string(r.status) << ','
        << fmt17(r.closed_form) << ',' << csv_quote(flatten(r.inputs, fmt17)) << ','
        << csv_quote(flatten(r.numeric_routes, fmt17)) << ',' << csv_quote(flatten(r.rel_errors, fmt17)) << ','
        << csv_quote(r.note) << '\n';
  }
}

void emit_text(const std::vector<ReportRecord>& records, std::ostream& out) {
  constexpr int kSuite = 15;
  constexpr int kScenario = 34;
  constexpr int kStatus = 8;
  constexpr int kValue = 20;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s %-*s %-*s %-*s %-*s %s\n", kSuite, "suite", kScenario, "scenario", kStatus,
                "status", kValue, "closed_form", kValue, "worst_error", "routes");
  out << line;
  for (const auto& r : records) {
    // Largest error in magnitude, sign kept (negative = below a bound).
    double worst = 0.0;
    for (const auto& [k, v] : r.rel_errors) {
      if (std::abs(v) > std::abs(worst)) worst = v;
    }
    std::string routes = flatten(r.numeric_routes, fmt_short);
    if (!r.note.empty()) routes += (routes.empty() ? "" : "  ") + std::string("# ") + r.note;
    std::snprintf(line, sizeof line, "%-*s %-*s %-*s %-*s %-*s ", kSuite, r.suite.c_str(), kScenario,
                  r.scenario.c_str(), kStatus, to_string(r.status), kValue, fmt_short(r.closed_form).c_str(), kValue,
                  r.rel_errors.empty() ? "-" : fmt_short(worst).c_str());
    out << line << routes << '\n';
  }
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::flagged:
      return "flagged";
  }
  return "?";
}

ReportRecord two_sided_record(std::string suite, std::string scenario, std::map<std::string, double> inputs,
                              double closed, std::map<std::string, double> routes, double tol) {
  auto r = make(std::move(suite), std::move(scenario), std::move(inputs), closed, std::move(routes));
  for (const auto& [k, v] : r.numeric_routes) {
    const double err = std::abs(v - closed) / std::abs(closed);
    r.rel_errors[k] = err;
    if (!(err <= tol)) r.status = Status::fail;
  }
  return r;
}

ReportRecord upper_bound_record(std::string suite, std::string scenario, std::map<std::string, double> inputs,
                                double closed, std::map<std::string, double> routes, double tol) {
  auto r = make(std::move(suite), std::move(scenario), std::move(inputs), closed, std::move(routes));
  for (const auto& [k, v] : r.numeric_routes) {
    const double excess = (v - closed) / std::abs(closed);
    r.rel_errors[k] = excess;
    if (!(excess <= tol)) r.status = Status::fail;
  }
  return r;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "aligned-text" || name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or aligned-text)");
}

void emit_table(const std::vector<ReportRecord>& records, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      emit_json(records, out);
      break;
    case Format::csv:
      emit_csv(records, out);
      break;
    case Format::text:
      emit_text(records, out);
      break;
  }
  out.flush();
  if (!out) throw std::runtime_error("failed to write the report");
}

}  // namespace hypnorm::cli
