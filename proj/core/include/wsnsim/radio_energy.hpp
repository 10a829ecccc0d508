#pragma once

// First-order radio model.

#include <cstdint>

namespace wsnsim {

struct RadioParams {
  double e_elec = 50e-12;      // J/bit, transmitter and receiver electronics
  double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier
  double eps_amp = 0.0013e-12; // J/bit/m^4, multipath amplifier
  double e_da = 5e-12;         // J/bit/signal, data aggregation

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Throws ConfigError unless every constant is strictly positive and finite.
void validate(const RadioParams& params);

/// Distance at which the d^2 and d^4 amplifier terms coincide: sqrt(eps_fs / eps_amp).
double crossover_distance(const RadioParams& params);

/// Energy to transmit `bits` over `d` meters. d >= crossover uses the d^4 branch.
double tx_cost(std::uint64_t bits, double d, const RadioParams& params);

double rx_cost(std::uint64_t bits, const RadioParams& params);

/// Fusing `n_signals` packets of `bits` each, the aggregator's own reading included.
double aggregation_cost(std::uint64_t bits, std::uint64_t n_signals, const RadioParams& params);

}  // namespace wsnsim
