#include "tsrelay/outage.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tsrelay/bessel.hpp"
#include "tsrelay/errors.hpp"

namespace tsrelay {

namespace {

constexpr double kEqualTolerance = 1e-9;
// Half-width of the relative window in which the divided difference is summed as a series.
constexpr double kSeriesWindow = 1e-3;
constexpr int kSeriesTerms = 5;
// K_nu(x) is below the smallest subnormal past this point.
constexpr double kBesselUnderflow = 745.0;
constexpr double kClampSlack = 1e-12;

// E[exp(-beta / X)] for X ~ Exp(rate) = 2 sqrt(beta rate) K1(2 sqrt(beta rate)).
double inverse_laplace_exp(double beta, double rate) {
  const double x = 2.0 * std::sqrt(beta * rate);
  if (x > kBesselUnderflow) return 0.0;
  return x * special::bessel_k1(x);
}

// rate1 * rate2 * (G(rate1) - G(rate2)) / (rate2 - rate1) with G(s) = g(s) / s,
// expanded about the midpoint m: G^(n)(m) = 4 beta (-2 beta)^n x^(-1-n) K_{n+1}(x),
// x = 2 sqrt(beta m).
double tail_series(double beta, double rate1, double rate2) {
  const double mid = 0.5 * (rate1 + rate2);
  const double half = 0.5 * (rate1 - rate2);
  const double x = 2.0 * std::sqrt(beta * mid);
  if (x > kBesselUnderflow) return 0.0;

  constexpr int kMaxOrder = 2 * kSeriesTerms + 1;
  std::array<double, kMaxOrder + 2> k{};
  k[0] = special::bessel_k0(x);
  k[1] = special::bessel_k1(x);
  for (int n = 1; n <= kMaxOrder; ++n) k[n + 1] = k[n - 1] + 2.0 * n / x * k[n];

  const double ratio = x / (2.0 * mid);
  double sum = 0.0;
  double power = ratio;  // ratio^n
  double factorial = 1.0;  // n!
  double h2j = 1.0;  // half^(2j)
  for (int j = 0; j < kSeriesTerms; ++j) {
    const int n = 2 * j + 1;
    const double term = power * k[n + 1] * h2j / factorial;
    if (!std::isfinite(term)) break;
    sum += term;
    power *= ratio * ratio;
    factorial *= static_cast<double>(n + 1) * (n + 2);
    h2j *= half * half;
  }
  return rate1 * rate2 * (4.0 * beta / x) * sum;
}

OutageValue finish(double success, Branch branch) {
  double p = 1.0 - success;
  if (!(p >= -kClampSlack && p <= 1.0 + kClampSlack)) {
    throw ConsistencyError("closed-form outage probability " + std::to_string(p) +
                           " outside [0, 1]");
  }
  return {std::clamp(p, 0.0, 1.0), branch};
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ParameterError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::general:
      return "general";
    case Branch::equal:
      return "equal";
    case Branch::general_general:
      return "general-general";
    case Branch::general_equal:
      return "general-equal";
    case Branch::equal_general:
      return "equal-general";
    case Branch::equal_equal:
      return "equal-equal";
    case Branch::degenerate:
      return "degenerate";
  }
  return "unknown";
}

void WeightedExpSum::validate() const {
  if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b))) {
    throw ParameterError("weights a, b must be finite and > 0");
  }
  if (!(lambda1 > 0.0 && lambda2 > 0.0 && std::isfinite(lambda1) && std::isfinite(lambda2))) {
    throw ParameterError("rates lambda1, lambda2 must be finite and > 0");
  }
}

bool WeightedExpSum::equal_branch() const {
  const double p = a * lambda2;
  const double q = b * lambda1;
  return std::abs(p - q) <= kEqualTolerance * std::max(p, q);
}

double pdf_weighted_exp_sum(const WeightedExpSum& sum, double z) {
  sum.validate();
  if (!(z >= 0.0)) throw DomainError("density of a weighted exponential sum requires z >= 0");
  // Component rates of aX and bY.
  const double r1 = sum.lambda1 / sum.a;
  const double r2 = sum.lambda2 / sum.b;
  if (sum.equal_branch()) return r1 * r2 * z * std::exp(-r2 * z);
  const double lo = std::min(r1, r2);
  const double gap = std::abs(r2 - r1);
  return r1 * r2 * std::exp(-lo * z) * (-std::expm1(-gap * z)) / gap;
}

double cdf_min_weighted(const SystemParams& params, double w) {
  if (!(w >= 0.0)) throw DomainError("cdf_min_weighted requires w >= 0");
  const double rate =
      params.path_loss(Link::first) * params.noise.user_total(Link::first) * params.fading.lambda_f1 +
      params.path_loss(Link::second) * params.noise.user_total(Link::second) * params.fading.lambda_f2;
  return -std::expm1(-rate * w);
}

TailValue tail_integral(double beta, const WeightedExpSum& sum) {
  sum.validate();
  if (!(beta >= 0.0)) throw ParameterError("tail_integral requires beta >= 0");
  const bool equal = sum.equal_branch();
  if (beta == 0.0) return {1.0, equal};
  if (std::isinf(beta)) return {0.0, equal};

  const double rate1 = sum.lambda1 / sum.a;
  const double rate2 = sum.lambda2 / sum.b;
  const double mid = 0.5 * (rate1 + rate2);
  double value = 0.0;
  if (std::abs(rate1 - rate2) <= 2.0 * kSeriesWindow * mid) {
    value = tail_series(beta, rate1, rate2);
  } else {
    value = (rate2 * inverse_laplace_exp(beta, rate1) - rate1 * inverse_laplace_exp(beta, rate2)) /
            (rate2 - rate1);
  }
  return {value, equal};
}

TsncrCoefficients TsncrCoefficients::compute(const SystemParams& params, double rho) {
  params.validate();
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("TSNCR coefficients require 0 < rho < 1");
  const double pl1 = params.path_loss(Link::first);
  const double pl2 = params.path_loss(Link::second);
  const double gain = 3.0 * rho * params.eta / (2.0 * (1.0 - rho));

  TsncrCoefficients c;
  c.u0 = std::expm1(std::numbers::ln2 * 3.0 * params.R0 / (1.0 - rho));
  c.a = gain * params.P1 / pl1;
  c.b = gain * params.P2 / pl2;
  c.a0 = c.u0 * pl1 * params.noise.relay_total(Link::first) / params.P1;
  c.b0 = c.u0 * pl2 * params.noise.relay_total(Link::second) / params.P2;
  c.e0 = pl1 * params.noise.user_total(Link::first) * params.fading.lambda_f1 +
         pl2 * params.noise.user_total(Link::second) * params.fading.lambda_f2;
  return c;
}

TsfprCoefficients TsfprCoefficients::compute(const SystemParams& params, double rho, double theta) {
  params.validate();
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("TSFPR coefficients require 0 < rho < 1");
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("TSFPR coefficients require 0 < theta < 1");
  const double pl1 = params.path_loss(Link::first);
  const double pl2 = params.path_loss(Link::second);
  const double gain = 2.0 * rho * params.eta / (1.0 - rho);
  const auto& fading = params.fading;

  TsfprCoefficients c;
  c.u0 = std::expm1(std::numbers::ln2 * 4.0 * params.R0 / (1.0 - rho));
  c.a = (1.0 - theta) * gain * params.P1 / pl1;
  c.b = (1.0 - theta) * gain * params.P2 / pl2;
  c.c = theta * gain * params.P1 / pl1;
  c.d = theta * gain * params.P2 / pl2;
  c.a0 = c.u0 * pl1 * params.noise.relay_total(Link::first) / params.P1;
  c.b0 = c.u0 * pl2 * params.noise.relay_total(Link::second) / params.P2;
  c.c0 = c.u0 * pl2 * params.noise.user_total(Link::second);
  c.d0 = c.u0 * pl1 * params.noise.user_total(Link::first);
  c.e0 = std::exp(-fading.lambda_h1 * c.a0 - fading.lambda_h2 * c.b0);
  return c;
}

OutageValue outage_tsncr(const SystemParams& params, double rho) {
  params.validate();
  check_unit(rho, "rho");
  if (rho == 0.0 || rho == 1.0) return {1.0, Branch::degenerate};

  const auto c = TsncrCoefficients::compute(params, rho);
  const auto& fading = params.fading;
  const double uplink = std::exp(-fading.lambda_h1 * c.a0 - fading.lambda_h2 * c.b0);
  const auto broadcast = tail_integral(c.e0 * c.u0, {c.a, c.b, fading.lambda_h1, fading.lambda_h2});
  return finish(uplink * broadcast.probability, broadcast.equal_branch ? Branch::equal : Branch::general);
}

OutageValue outage_tsfpr(const SystemParams& params, double rho, double theta) {
  params.validate();
  check_unit(rho, "rho");
  check_unit(theta, "theta");
  if (rho == 0.0 || rho == 1.0 || theta == 0.0 || theta == 1.0) return {1.0, Branch::degenerate};

  const auto c = TsfprCoefficients::compute(params, rho, theta);
  const auto& fading = params.fading;
  const auto to_u2 = tail_integral(fading.lambda_f2 * c.c0, {c.a, c.b, fading.lambda_h1, fading.lambda_h2});
  const auto to_u1 = tail_integral(fading.lambda_f1 * c.d0, {c.c, c.d, fading.lambda_h1, fading.lambda_h2});

  Branch branch = Branch::general_general;
  if (to_u2.equal_branch) {
    branch = to_u1.equal_branch ? Branch::equal_equal : Branch::equal_general;
  } else if (to_u1.equal_branch) {
    branch = Branch::general_equal;
  }
  return finish(c.e0 * to_u2.probability * to_u1.probability, branch);
}

OutageValue outage(const SystemParams& params, const ProtocolConfig& config) {
  config.validate();
  return config.kind == Protocol::tsncr ? outage_tsncr(params, config.rho)
                                        : outage_tsfpr(params, config.rho, config.theta);
}

double outage_capacity(const SystemParams& params, const ProtocolConfig& config, double p_out) {
  config.validate();
  check_unit(p_out, "p_out");
  const double duty = config.kind == Protocol::tsncr ? 2.0 * (1.0 - config.rho) / 3.0
                                                     : (1.0 - config.rho) / 2.0;
  return duty * (1.0 - p_out) * params.R0;
}

}  // namespace tsrelay
