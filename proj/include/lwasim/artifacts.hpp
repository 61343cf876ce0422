#pragma once

#include <iosfwd>
#include <string>

#include "lwasim/scenario.hpp"

namespace lwasim {

/// summary.json, deliveries.csv, aggregated.csv and config.txt under
/// out_dir. Output is a pure function of the run result, so same-seed
/// runs produce byte-identical files.
void write_run_artifacts(const std::string& out_dir, const RunResult& result);

/// Per-flow human-readable statistics plus the aggregation summary.
void print_report(std::ostream& out, const RunResult& result);

std::string summary_json_text(const RunResult& result);

} // namespace lwasim
