#ifndef DEGSEQ_REPORT_HPP
#define DEGSEQ_REPORT_HPP

#include <string>

#include "degseq/degree_sequence.hpp"
#include "degseq/experiments.hpp"

namespace degseq {

// Shortest round-trip decimal for doubles; integers and strings verbatim.
std::string format_cell(const ReportCell& cell);

// CSV with a '#'-prefixed provenance header block and trailing summary.
std::string report_to_csv(const ExperimentReport& report);

// Single JSON document mirroring the report (insertion-ordered keys).
std::string report_to_json(const ExperimentReport& report);

// One JSON-lines sample record: {"trial":r,"s":[...],"t":[...],"k":K}.
std::string sample_record_line(long long trial, const DegreeSequence& ds);

// Serializes in cfg.format and writes to cfg.out_path (or stdout).
void write_report(const ExperimentReport& report, const ExperimentConfig& cfg);

}  // namespace degseq

#endif
