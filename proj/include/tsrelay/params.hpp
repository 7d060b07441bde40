#pragma once

#include <array>
#include <string_view>

namespace tsrelay {

/// Link index of a source node. U1 <-> R is `first`, U2 <-> R is `second`.
enum class Link : int { first = 1, second = 2 };

/// Array slot for a link; throws ParameterError for anything but 1 or 2.
int link_slot(Link link);

/// Receiver noise variances in watts. Index 0 belongs to link 1, index 1 to link 2.
/// The antenna and conversion components add up to the total seen by the decoder.
struct NoiseModel {
  std::array<double, 2> relay_antenna{0.01, 0.01};
  std::array<double, 2> relay_conversion{0.01, 0.01};
  std::array<double, 2> user_antenna{0.01, 0.01};
  std::array<double, 2> user_conversion{0.01, 0.01};

  double relay_total(Link link) const;
  double user_total(Link link) const;

  void validate() const;
};

/// Rate parameters of the exponential fading power gains (mean = 1 / rate).
struct FadingModel {
  double lambda_h1 = 1.0;
  double lambda_h2 = 1.0;
  double lambda_f1 = 1.0;
  double lambda_f2 = 1.0;

  void validate() const;
};

/// Static physical scenario. Defaults reproduce the symmetric evaluation setup
/// (unit powers and distances, m = 2.7, eta = 1, R0 = 1 bit/s/Hz).
struct SystemParams {
  double P1 = 1.0;
  double P2 = 1.0;
  double d1 = 1.0;
  double d2 = 1.0;
  double m = 2.7;
  double eta = 1.0;
  double R0 = 1.0;
  double T = 1.0;
  double bandwidth = 1.0;
  NoiseModel noise;
  FadingModel fading;

  double power(Link link) const;
  double distance(Link link) const;
  /// d_i^m
  double path_loss(Link link) const;

  void validate() const;
};

enum class Protocol { tsncr, tsfpr };

std::string_view to_string(Protocol p);
Protocol protocol_from_string(std::string_view s);

/// Protocol selection plus its tunables. theta is ignored by TSNCR.
struct ProtocolConfig {
  Protocol kind = Protocol::tsncr;
  double rho = 0.5;
  double theta = 0.5;

  /// Number of equal information slots sharing (1 - rho) T.
  int phases() const { return kind == Protocol::tsncr ? 3 : 4; }

  void validate() const;
};

/// One realization of the four fading power gains.
struct ChannelDraw {
  double h1sq = 0.0;
  double h2sq = 0.0;
  double f1sq = 0.0;
  double f2sq = 0.0;

  double h(Link link) const;
  double f(Link link) const;

  void validate() const;
};

}  // namespace tsrelay
