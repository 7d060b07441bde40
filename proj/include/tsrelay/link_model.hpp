#pragma once

#include "tsrelay/params.hpp"

// Per-realization energy, power and rate equations of the two time-switching
// protocols. Rates are in bits/s/Hz (base-2 logarithm). Every function is pure.

namespace tsrelay {

/// Energy the relay harvests from source `link` during its rho*T/2 harvesting slot.
double harvested_energy(const SystemParams& params, double rho, double h_sq, Link link);

/// Relay transmit power when all harvested energy is spent in one (1-rho)T/3 broadcast slot.
/// Throws DegenerateConfigError for rho == 1.
double relay_power_tsncr(const SystemParams& params, double rho, const ChannelDraw& draw);

/// Relay power budget for the two (1-rho)T/4 forwarding slots; equals 4/3 of the TSNCR value.
double relay_power_tsfpr(const SystemParams& params, double rho, const ChannelDraw& draw);

/// Source-to-relay rate on `link`. Prefactor (1-rho)/3 for TSNCR, (1-rho)/4 for TSFPR.
double rate_uplink(const SystemParams& params, double rho, double h_sq, Link link, Protocol kind);

/// Network-coded broadcast rate, limited by the weaker of the two downlinks.
double rate_broadcast_tsncr(const SystemParams& params, double rho, const ChannelDraw& draw);

/// TSFPR relay-to-U_j rate with power share theta (j = 1) or 1 - theta (j = 2).
double rate_downlink_tsfpr(const SystemParams& params, double rho, double theta,
                           const ChannelDraw& draw, Link link);

/// True iff any constituent rate of the protocol falls below R0.
/// R0 == 0 never outages; rho == 1 (no transmission time) always does when R0 > 0.
bool outage_event(const SystemParams& params, const ProtocolConfig& config, const ChannelDraw& draw);

}  // namespace tsrelay
