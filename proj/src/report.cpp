#include "degseq/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "degseq/errors.hpp"

namespace degseq {

namespace {

std::string double_to_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

nlohmann::ordered_json cell_to_json(const ReportCell& cell) {
  if (std::holds_alternative<long long>(cell))
    return std::get<long long>(cell);
  if (std::holds_alternative<double>(cell)) {
    const double x = std::get<double>(cell);
    if (std::isnan(x) || std::isinf(x)) return double_to_string(x);
    return x;
  }
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_cell(const ReportCell& cell) {
  if (std::holds_alternative<long long>(cell))
    return std::to_string(std::get<long long>(cell));
  if (std::holds_alternative<double>(cell))
    return double_to_string(std::get<double>(cell));
  return std::get<std::string>(cell);
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.provenance)
    out << "# " << key << "=" << value << "\n";
  if (!report.columns.empty()) {
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      if (i) out << ',';
      out << report.columns[i];
    }
    out << "\n";
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << format_cell(row[i]);
      }
      out << "\n";
    }
  }
  for (const auto& [key, value] : report.summary)
    out << "# summary." << key << "=" << format_cell(value) << "\n";
  if (report.verdict.has_value())
    out << "# verdict=" << (*report.verdict ? "pass" : "fail") << "\n";
  return out.str();
}

std::string report_to_json(const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json provenance;
  for (const auto& [key, value] : report.provenance) provenance[key] = value;
  doc["provenance"] = std::move(provenance);
  doc["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : row) cells.push_back(cell_to_json(cell));
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json summary;
  for (const auto& [key, value] : report.summary)
    summary[key] = cell_to_json(value);
  doc["summary"] = std::move(summary);
  if (report.verdict.has_value())
    doc["verdict"] = *report.verdict ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string sample_record_line(long long trial, const DegreeSequence& ds) {
  std::ostringstream out;
  out << "{\"trial\":" << trial << ",\"s\":[";
  for (std::size_t i = 0; i < ds.s().size(); ++i) {
    if (i) out << ',';
    out << ds.s()[i];
  }
  out << "],\"t\":[";
  for (std::size_t j = 0; j < ds.t().size(); ++j) {
    if (j) out << ',';
    out << ds.t()[j];
  }
  out << "],\"k\":" << ds.total_s() << "}";
  return out.str();
}

void write_report(const ExperimentReport& report,
                  const ExperimentConfig& cfg) {
  std::string text;
  switch (cfg.format) {
    case ExperimentConfig::Format::csv:
      text = report_to_csv(report);
      break;
    case ExperimentConfig::Format::json:
    case ExperimentConfig::Format::jsonl:
      text = report_to_json(report);
      break;
  }
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file: " + cfg.out_path);
  file << text;
}

}  // namespace degseq
