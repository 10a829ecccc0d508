#include "wsnsim/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wsnsim/config.hpp"

namespace wsnsim {

std::string csv_header() {
  return "round,alive,heads,orphans_total,orphans_recovered,gateways,connectivity_rate,"
         "coverage_rate,energy_dissipated,energy_remaining,packets_to_bs,sources_delivered";
}

namespace {

struct Sci {
  double v;
};
struct Rate {
  double v;
};

std::ostream& operator<<(std::ostream& os, Sci s) {
  return os << std::scientific << std::setprecision(14) << s.v << std::defaultfloat;
}

std::ostream& operator<<(std::ostream& os, Rate r) {
  return os << std::setprecision(15) << r.v;
}

}  // namespace

void write_csv(const SimulationTrace& trace, std::ostream& out) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << csv_header() << '\n';
  for (const RoundMetrics& m : trace.rounds) {
    buf << m.round << ',' << m.alive << ',' << m.heads << ',' << m.orphans_total << ','
        << m.orphans_recovered << ',' << m.gateways << ',' << Rate{m.connectivity_rate} << ','
        << Rate{m.coverage_rate} << ',' << Sci{m.energy_dissipated} << ','
        << Sci{m.energy_remaining} << ',' << m.packets_to_bs << ',' << m.sources_delivered
        << '\n';
  }
  out << buf.str();
}

std::string format_csv(const SimulationTrace& trace) {
  std::ostringstream out;
  write_csv(trace, out);
  return out.str();
}

void emit_csv(const SimulationTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_csv(trace, out);
  out.flush();
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

TraceSummary summarize(const SimulationTrace& trace) {
  TraceSummary s;
  s.rounds = trace.rounds.size();
  s.lifetime = trace.lifetime;
  for (const RoundMetrics& m : trace.rounds) {
    s.mean_connectivity += m.connectivity_rate;
    s.mean_coverage += m.coverage_rate;
    s.total_orphans += m.orphans_total;
    s.total_recovered += m.orphans_recovered;
    s.total_gateways += m.gateways;
    s.total_packets_to_bs += m.packets_to_bs;
    s.total_sources_delivered += m.sources_delivered;
    s.total_energy_dissipated += m.energy_dissipated;
  }
  if (s.rounds > 0) {
    s.mean_connectivity /= static_cast<double>(s.rounds);
    s.mean_coverage /= static_cast<double>(s.rounds);
  }
  return s;
}

namespace {

struct Row {
  std::string name;
  std::vector<std::string> cells;
  std::string delta;
};

std::string milestone(const std::optional<RoundIndex>& r) {
  return r ? std::to_string(*r) : std::string("-");
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string signed_count(std::size_t a, std::size_t b) {
  if (b >= a) return "+" + std::to_string(b - a);
  return "-" + std::to_string(a - b);
}

std::string signed_milestone(const std::optional<RoundIndex>& a,
                             const std::optional<RoundIndex>& b) {
  if (!a || !b) return "-";
  return signed_count(static_cast<std::size_t>(*a), static_cast<std::size_t>(*b));
}

std::string signed_fixed(double a, double b, int digits) {
  const double d = b - a;
  return (d >= 0.0 ? "+" : "") + fixed(d, digits);
}

}  // namespace

std::string emit_summary(std::span<const SimulationTrace> traces) {
  if (traces.empty()) {
    throw std::invalid_argument("emit_summary: no traces");
  }
  std::vector<TraceSummary> sums;
  for (const SimulationTrace& t : traces) sums.push_back(summarize(t));
  const bool delta = traces.size() == 2;

  std::vector<Row> rows;
  auto add = [&](std::string name, auto cell, std::string d) {
    Row row{std::move(name), {}, std::move(d)};
    for (const TraceSummary& s : sums) row.cells.push_back(cell(s));
    rows.push_back(std::move(row));
  };
  const TraceSummary& a = sums.front();
  const TraceSummary& b = sums.back();
  add("rounds", [](const TraceSummary& s) { return std::to_string(s.rounds); },
      delta ? signed_count(a.rounds, b.rounds) : "");
  add("first_node_death", [](const TraceSummary& s) { return milestone(s.lifetime.first_node_death); },
      delta ? signed_milestone(a.lifetime.first_node_death, b.lifetime.first_node_death) : "");
  add("half_alive", [](const TraceSummary& s) { return milestone(s.lifetime.half_alive); },
      delta ? signed_milestone(a.lifetime.half_alive, b.lifetime.half_alive) : "");
  add("last_node_death", [](const TraceSummary& s) { return milestone(s.lifetime.last_node_death); },
      delta ? signed_milestone(a.lifetime.last_node_death, b.lifetime.last_node_death) : "");
  add("mean_connectivity", [](const TraceSummary& s) { return fixed(s.mean_connectivity, 6); },
      delta ? signed_fixed(a.mean_connectivity, b.mean_connectivity, 6) : "");
  add("mean_coverage", [](const TraceSummary& s) { return fixed(s.mean_coverage, 6); },
      delta ? signed_fixed(a.mean_coverage, b.mean_coverage, 6) : "");
  add("orphans_total", [](const TraceSummary& s) { return std::to_string(s.total_orphans); },
      delta ? signed_count(a.total_orphans, b.total_orphans) : "");
  add("orphans_recovered", [](const TraceSummary& s) { return std::to_string(s.total_recovered); },
      delta ? signed_count(a.total_recovered, b.total_recovered) : "");
  add("gateways", [](const TraceSummary& s) { return std::to_string(s.total_gateways); },
      delta ? signed_count(a.total_gateways, b.total_gateways) : "");
  add("packets_to_bs", [](const TraceSummary& s) { return std::to_string(s.total_packets_to_bs); },
      delta ? signed_count(a.total_packets_to_bs, b.total_packets_to_bs) : "");
  add("sources_delivered",
      [](const TraceSummary& s) { return std::to_string(s.total_sources_delivered); },
      delta ? signed_count(a.total_sources_delivered, b.total_sources_delivered) : "");
  add("energy_dissipated", [](const TraceSummary& s) { return fixed(s.total_energy_dissipated, 9); },
      delta ? signed_fixed(a.total_energy_dissipated, b.total_energy_dissipated, 9) : "");

  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::left << std::setw(20) << "metric";
  for (const SimulationTrace& t : traces) {
    out << std::right << std::setw(16) << to_string(t.config.protocol);
  }
  if (delta) out << std::setw(16) << "delta";
  out << '\n';
  for (const Row& row : rows) {
    out << std::left << std::setw(20) << row.name;
    for (const std::string& c : row.cells) out << std::right << std::setw(16) << c;
    if (delta) out << std::right << std::setw(16) << row.delta;
    out << '\n';
  }
  for (const SimulationTrace& t : traces) {
    out << to_string(t.config.protocol) << " terminated: " << to_string(t.termination) << '\n';
  }
  return out.str();
}

}  // namespace wsnsim
