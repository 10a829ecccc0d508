#pragma once

// Trace serialization: per-round CSV and a plain-text run summary.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "wsnsim/metrics_trace.hpp"

namespace wsnsim {

/// Header row, in RoundMetrics declaration order.
std::string csv_header();

/// Header plus one row per round, '\n' line endings, trailing newline.
/// Energies use scientific notation with 15 significant digits; rates use 15
/// significant digits. Output depends only on the trace.
void write_csv(const SimulationTrace& trace, std::ostream& out);
std::string format_csv(const SimulationTrace& trace);

/// Writes the CSV to `path`. Throws IoError naming the path on failure.
void emit_csv(const SimulationTrace& trace, const std::filesystem::path& path);

/// Aggregate view of one trace.
struct TraceSummary {
  std::size_t rounds = 0;
  double mean_connectivity = 0.0;
  double mean_coverage = 0.0;
  std::size_t total_orphans = 0;
  std::size_t total_recovered = 0;
  std::size_t total_gateways = 0;
  std::size_t total_packets_to_bs = 0;
  std::size_t total_sources_delivered = 0;
  double total_energy_dissipated = 0.0;
  Lifetime lifetime;
};

TraceSummary summarize(const SimulationTrace& trace);

/// Lifetime milestones, mean connectivity and coverage, orphan and packet
/// totals. With two traces (LEACH then O-LEACH) adds a delta column
/// (second minus first). Throws std::invalid_argument when `traces` is empty.
std::string emit_summary(std::span<const SimulationTrace> traces);

}  // namespace wsnsim
