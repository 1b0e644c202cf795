#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hypnorm::cli {

enum class Status { pass, fail, flagged };

const char* to_string(Status s);

// One verification outcome: a closed-form value against numerical routes.
struct ReportRecord {
  std::string suite;
  std::string scenario;
  std::map<std::string, double> inputs;
  double closed_form = 0.0;
  std::map<std::string, double> numeric_routes;
  std::map<std::string, double> rel_errors;
  Status status = Status::pass;
  std::string note;
};

/// |route - closed| / |closed| for every route; pass iff all are <= tol.
ReportRecord two_sided_record(std::string suite, std::string scenario, std::map<std::string, double> inputs,
                              double closed, std::map<std::string, double> routes, double tol);

/// (route - closed) / |closed| for every route, i.e. the signed excess over a
/// bound; pass iff all are <= tol.
ReportRecord upper_bound_record(std::string suite, std::string scenario, std::map<std::string, double> inputs,
                                double closed, std::map<std::string, double> routes, double tol);

enum class Format { json, csv, text };

/// Parses "json", "csv" or "aligned-text"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// Serializes records grouped by suite, in the order given. Reals use 17
/// significant digits in csv and the shortest round-trip form in json; a
/// non-finite real is written as null (json) or inf/nan (csv, text).
void emit_table(const std::vector<ReportRecord>& records, Format format, std::ostream& out);

}  // namespace hypnorm::cli
