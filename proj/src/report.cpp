#include "wilsonlab/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "wilsonlab/error.hpp"

namespace wilsonlab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_report(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite.suite_id;
  doc["params"] = {
      {"checks", report.suite.check_ids},
      {"p_min", report.suite.p_min},
      {"p_max", report.suite.p_max},
      {"mod_exp", report.suite.modulus_exp},
      {"engine", std::string(engine_name(report.suite.engine))},
      {"wall_time", report.wall_time},
  };
  auto results = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json row;
    row["check"] = r.check_id;
    row["p"] = r.p;
    row["mod_exp"] = r.modulus_exp;
    row["lhs"] = value_string(r.lhs);
    row["rhs"] = value_string(r.rhs);
    row["status"] = std::string(status_name(r.status));
    row["reason"] = r.reason;
    results.push_back(std::move(row));
  }
  doc["results"] = std::move(results);
  doc["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}};
  return doc.dump(2) + "\n";
}

std::string csv_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "check,p,mod_exp,lhs,rhs,status,reason\n";
  for (const auto& r : report.results) {
    out << csv_field(r.check_id) << ',' << r.p << ',' << r.modulus_exp << ',' << value_string(r.lhs) << ','
        << value_string(r.rhs) << ',' << status_name(r.status) << ',' << csv_field(r.reason) << '\n';
  }
  return out.str();
}

std::string text_report(const SuiteReport& report) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"check", "p", "mod", "lhs", "rhs", "status", "reason"});
  for (const auto& r : report.results) {
    rows.push_back({r.check_id, std::to_string(r.p), std::to_string(r.modulus_exp), value_string(r.lhs),
                    value_string(r.rhs), std::string(status_name(r.status)), r.reason});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::ostringstream line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const bool numeric = i == 1 || i == 2;
      line << (numeric ? std::right : std::left) << std::setw(static_cast<int>(width[i])) << row[i] << "  ";
    }
    std::string s = line.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << '\n';
  }
  out << "\n" << report.summary.pass << " pass, " << report.summary.fail << " fail, " << report.summary.skipped
      << " skipped (" << std::fixed << std::setprecision(2) << report.wall_time << " s)\n";
  return out.str();
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw Error(ErrorKind::PreconditionViolated, "unknown format '" + std::string(name) + "'");
}

std::string render_report(const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return json_report(report);
    case ReportFormat::Csv: return csv_report(report);
    case ReportFormat::Text: return text_report(report);
  }
  return {};
}

}  // namespace wilsonlab
