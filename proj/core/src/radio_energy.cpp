#include "wsnsim/radio_energy.hpp"

#include <cmath>

#include "wsnsim/net_model.hpp"

namespace wsnsim {

void validate(const RadioParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(p.e_elec)) throw ConfigError("e_elec: value out of range, expected > 0");
  if (!positive(p.eps_fs)) throw ConfigError("eps_fs: value out of range, expected > 0");
  if (!positive(p.eps_amp)) throw ConfigError("eps_amp: value out of range, expected > 0");
  if (!positive(p.e_da)) throw ConfigError("e_da: value out of range, expected > 0");
}

double crossover_distance(const RadioParams& p) {
  validate(p);
  return std::sqrt(p.eps_fs / p.eps_amp);
}

double tx_cost(std::uint64_t bits, double d, const RadioParams& p) {
  const auto l = static_cast<double>(bits);
  if (d < std::sqrt(p.eps_fs / p.eps_amp)) {
    return l * p.e_elec + l * p.eps_fs * d * d;
  }
  return l * p.e_elec + l * p.eps_amp * (d * d) * (d * d);
}

double rx_cost(std::uint64_t bits, const RadioParams& p) {
  return static_cast<double>(bits) * p.e_elec;
}

double aggregation_cost(std::uint64_t bits, std::uint64_t n_signals, const RadioParams& p) {
  return static_cast<double>(n_signals) * static_cast<double>(bits) * p.e_da;
}

}  // namespace wsnsim
