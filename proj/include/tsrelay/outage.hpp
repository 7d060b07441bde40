#pragma once

#include <string_view>

#include "tsrelay/params.hpp"

namespace tsrelay {

/// Which case of the closed form fired. TSNCR has a single discriminant
/// (a*lambda_h2 vs b*lambda_h1) and reports `general` or `equal`; TSFPR has two
/// (the (a, b) pair, then the (c, d) pair) and reports one of the four pairs.
/// `degenerate` marks the rho in {0, 1} / theta in {0, 1} short-circuit.
enum class Branch {
  general,
  equal,
  general_general,
  general_equal,
  equal_general,
  equal_equal,
  degenerate,
};

std::string_view to_string(Branch b);

/// Distribution of Z = a X + b Y with X ~ Exp(lambda1), Y ~ Exp(lambda2) independent.
struct WeightedExpSum {
  double a = 1.0;
  double b = 1.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  void validate() const;
  /// |a lambda2 - b lambda1| <= 1e-9 max(a lambda2, b lambda1)
  bool equal_branch() const;
};

/// Density of Z at z >= 0. Throws DomainError for z < 0.
double pdf_weighted_exp_sum(const WeightedExpSum& sum, double z);

/// CDF of w = min(|f1|^2 / (d1^m sigma_u1^2), |f2|^2 / (d2^m sigma_u2^2)).
double cdf_min_weighted(const SystemParams& params, double w);

struct TailValue {
  double probability = 1.0;
  bool equal_branch = false;
};

/// E[exp(-beta / Z)] = Pr[W >= u / Z] for W exponential with rate beta / u.
///
/// Evaluated in closed form through K1 (distinct rates) or K2 (equal rates).
/// Within a 1e-3 relative window around equal rates the divided difference is
/// summed as a Taylor series in K_n to avoid cancellation. Returns exactly 1
/// for beta == 0 and 0 for beta == +inf.
TailValue tail_integral(double beta, const WeightedExpSum& sum);

/// Scalars of the TSNCR closed form. `e0` is the broadcast noise-fading
/// aggregate d1^m sigma_u1^2 lambda_f1 + d2^m sigma_u2^2 lambda_f2.
struct TsncrCoefficients {
  double a = 0.0;
  double b = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;
  double u0 = 0.0;
  double e0 = 0.0;

  /// Requires 0 < rho < 1.
  static TsncrCoefficients compute(const SystemParams& params, double rho);
};

/// Scalars of the TSFPR closed form. (a, b) weight the power reaching U2,
/// (c, d) the power reaching U1; `e0` is the uplink success probability
/// exp(-lambda_h1 a0 - lambda_h2 b0).
struct TsfprCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;
  double u0 = 0.0;
  double c0 = 0.0;
  double d0 = 0.0;
  double e0 = 0.0;

  /// Requires 0 < rho < 1 and 0 < theta < 1.
  static TsfprCoefficients compute(const SystemParams& params, double rho, double theta);
};

struct OutageValue {
  double probability = 1.0;
  Branch branch = Branch::degenerate;
};

OutageValue outage_tsncr(const SystemParams& params, double rho);
OutageValue outage_tsfpr(const SystemParams& params, double rho, double theta);
OutageValue outage(const SystemParams& params, const ProtocolConfig& config);

/// Outage capacity after duty-cycle loss: 2(1-rho)/3 (TSNCR) or (1-rho)/2 (TSFPR)
/// times (1 - p_out) R0.
double outage_capacity(const SystemParams& params, const ProtocolConfig& config, double p_out);

}  // namespace tsrelay
