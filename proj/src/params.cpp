#include "tsrelay/params.hpp"

#include <cmath>
#include <string>

#include "tsrelay/errors.hpp"

namespace tsrelay {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

int link_slot(Link link) {
  switch (link) {
    case Link::first:
      return 0;
    case Link::second:
      return 1;
  }
  throw ParameterError("link index must be 1 or 2, got " +
                       std::to_string(static_cast<int>(link)));
}

double NoiseModel::relay_total(Link link) const {
  const int i = link_slot(link);
  return relay_antenna[i] + relay_conversion[i];
}

double NoiseModel::user_total(Link link) const {
  const int i = link_slot(link);
  return user_antenna[i] + user_conversion[i];
}

void NoiseModel::validate() const {
  for (int i = 0; i < 2; ++i) {
    for (double v : {relay_antenna[i], relay_conversion[i], user_antenna[i], user_conversion[i]}) {
      require(finite(v) && v >= 0.0, "noise variances must be finite and >= 0");
    }
    require(relay_antenna[i] + relay_conversion[i] > 0.0, "total relay noise variance must be > 0");
    require(user_antenna[i] + user_conversion[i] > 0.0, "total user noise variance must be > 0");
  }
}

void FadingModel::validate() const {
  for (double v : {lambda_h1, lambda_h2, lambda_f1, lambda_f2}) {
    require(finite(v) && v > 0.0, "fading rate parameters must be > 0");
  }
}

double SystemParams::power(Link link) const { return link_slot(link) == 0 ? P1 : P2; }

double SystemParams::distance(Link link) const { return link_slot(link) == 0 ? d1 : d2; }

double SystemParams::path_loss(Link link) const { return std::pow(distance(link), m); }

void SystemParams::validate() const {
  require(finite(P1) && P1 > 0.0, "P1 must be > 0");
  require(finite(P2) && P2 > 0.0, "P2 must be > 0");
  require(finite(d1) && d1 > 0.0, "d1 must be > 0");
  require(finite(d2) && d2 > 0.0, "d2 must be > 0");
  require(finite(m) && m >= 2.0, "path-loss exponent m must be >= 2");
  require(finite(eta) && eta > 0.0 && eta <= 1.0, "eta must lie in (0, 1]");
  require(finite(R0) && R0 >= 0.0, "R0 must be >= 0");
  require(finite(T) && T > 0.0, "T must be > 0");
  require(finite(bandwidth) && bandwidth > 0.0, "bandwidth must be > 0");
  noise.validate();
  fading.validate();
}

std::string_view to_string(Protocol p) { return p == Protocol::tsncr ? "tsncr" : "tsfpr"; }

Protocol protocol_from_string(std::string_view s) {
  if (s == "tsncr" || s == "TSNCR") return Protocol::tsncr;
  if (s == "tsfpr" || s == "TSFPR") return Protocol::tsfpr;
  throw ParameterError("unknown protocol '" + std::string(s) + "'");
}

void ProtocolConfig::validate() const {
  require(finite(rho) && rho >= 0.0 && rho <= 1.0, "rho must lie in [0, 1]");
  require(finite(theta) && theta >= 0.0 && theta <= 1.0, "theta must lie in [0, 1]");
}

double ChannelDraw::h(Link link) const { return link_slot(link) == 0 ? h1sq : h2sq; }

double ChannelDraw::f(Link link) const { return link_slot(link) == 0 ? f1sq : f2sq; }

void ChannelDraw::validate() const {
  for (double v : {h1sq, h2sq, f1sq, f2sq}) {
    require(v >= 0.0, "channel power gains must be >= 0");
  }
}

}  // namespace tsrelay
