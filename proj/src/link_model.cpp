#include "tsrelay/link_model.hpp"

#include <algorithm>
#include <cmath>

#include "tsrelay/errors.hpp"

namespace tsrelay {

namespace {

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in [0, 1]");
}

void check_transmitting(double rho) {
  check_rho(rho);
  if (rho == 1.0) throw DegenerateConfigError("rho == 1 leaves no time for information transfer");
}

double total_harvested(const SystemParams& params, double rho, const ChannelDraw& draw) {
  return harvested_energy(params, rho, draw.h1sq, Link::first) +
         harvested_energy(params, rho, draw.h2sq, Link::second);
}

double relay_power(const SystemParams& params, double rho, const ChannelDraw& draw, int phases) {
  check_transmitting(rho);
  const double slot = (1.0 - rho) * params.T / phases;
  return total_harvested(params, rho, draw) / slot;
}

}  // namespace

double harvested_energy(const SystemParams& params, double rho, double h_sq, Link link) {
  check_rho(rho);
  if (h_sq < 0.0) throw ParameterError("channel power gain must be >= 0");
  const double pl = params.path_loss(link);
  return params.eta * params.power(link) * h_sq * (rho * params.T / 2.0) / pl;
}

double relay_power_tsncr(const SystemParams& params, double rho, const ChannelDraw& draw) {
  return relay_power(params, rho, draw, 3);
}

double relay_power_tsfpr(const SystemParams& params, double rho, const ChannelDraw& draw) {
  return relay_power(params, rho, draw, 4);
}

double rate_uplink(const SystemParams& params, double rho, double h_sq, Link link, Protocol kind) {
  check_rho(rho);
  if (rho == 1.0) return 0.0;
  const double prefactor = (1.0 - rho) / (kind == Protocol::tsncr ? 3.0 : 4.0);
  const double snr =
      params.power(link) * h_sq / (params.path_loss(link) * params.noise.relay_total(link));
  return prefactor * std::log2(1.0 + snr);
}

double rate_broadcast_tsncr(const SystemParams& params, double rho, const ChannelDraw& draw) {
  const double pr = relay_power_tsncr(params, rho, draw);
  const double snr1 = pr * draw.f1sq / (params.path_loss(Link::first) * params.noise.user_total(Link::first));
  const double snr2 = pr * draw.f2sq / (params.path_loss(Link::second) * params.noise.user_total(Link::second));
  return (1.0 - rho) / 3.0 * std::log2(1.0 + std::min(snr1, snr2));
}

double rate_downlink_tsfpr(const SystemParams& params, double rho, double theta,
                           const ChannelDraw& draw, Link link) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw ParameterError("theta must lie in [0, 1]");
  const double pr = relay_power_tsfpr(params, rho, draw);
  const double share = link_slot(link) == 0 ? theta : 1.0 - theta;
  const double snr = share * pr * draw.f(link) / (params.path_loss(link) * params.noise.user_total(link));
  return (1.0 - rho) / 4.0 * std::log2(1.0 + snr);
}

bool outage_event(const SystemParams& params, const ProtocolConfig& config, const ChannelDraw& draw) {
  config.validate();
  if (params.R0 <= 0.0) return false;
  if (config.rho == 1.0) return true;

  const double rho = config.rho;
  const double r0 = params.R0;
  if (rate_uplink(params, rho, draw.h1sq, Link::first, config.kind) < r0) return true;
  if (rate_uplink(params, rho, draw.h2sq, Link::second, config.kind) < r0) return true;
  if (config.kind == Protocol::tsncr) return rate_broadcast_tsncr(params, rho, draw) < r0;
  return rate_downlink_tsfpr(params, rho, config.theta, draw, Link::first) < r0 ||
         rate_downlink_tsfpr(params, rho, config.theta, draw, Link::second) < r0;
}

}  // namespace tsrelay
