#pragma once

// Independent numerical oracles used by the unit and acceptance suites. They
// integrate the defining representations directly (Boost Gauss-Kronrod) and share
// no code path with the library's closed forms.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "tsrelay/params.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename F>
double integrate(F f, double lo, double hi, double tol = 1e-13, unsigned depth = 12) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, depth, tol);
}

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, split at the bulk of the mass.
inline double bessel_k(double nu, double x) {
  const auto f = [=](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
  const double peak = std::acosh(std::max(1.0, 1.0 / x));
  const double end = std::acosh(std::max(2.0, 800.0 / x));
  if (peak <= 0.0) return integrate(f, 0.0, end);
  return integrate(f, 0.0, peak) + integrate(f, peak, end);
}

/// E[exp(-beta / (shift + aX + bY))], X ~ Exp(l1), Y ~ Exp(l2), by nested quadrature.
inline double expect_inverse_exp_2d(double beta, double a, double b, double l1, double l2, double shift = 0.0) {
  const auto inner = [=](double x) {
    const auto g = [=](double y) {
      const double z = shift + a * x + b * y;
      return z > 0.0 ? l2 * std::exp(-l2 * y - beta / z) : 0.0;
    };
    return l1 * std::exp(-l1 * x) * integrate(g, 0.0, kInf, 1e-12, 10);
  };
  return integrate(inner, 0.0, kInf, 1e-12, 10);
}

/// Density of aX + bY written from the convolution of the two exponentials
/// (distinct component rates only).
inline double density_distinct(double a, double b, double l1, double l2, double z) {
  const double r1 = l1 / a;
  const double r2 = l2 / b;
  return r1 * r2 / (r2 - r1) * (std::exp(-r1 * z) - std::exp(-r2 * z));
}

/// int_0^inf exp(-beta / z) f_z(z) dz with the distinct-rate density (1-D form).
inline double tail_1d(double beta, double a, double b, double l1, double l2) {
  const auto f = [=](double z) { return z > 0.0 ? std::exp(-beta / z) * density_distinct(a, b, l1, l2, z) : 0.0; };
  return integrate(f, 0.0, kInf, 1e-13, 12);
}

/// TSNCR outage as 1 - Pr[h1 >= a0] Pr[h2 >= b0] Pr[w >= u0 / z], every factor by quadrature.
inline double outage_tsncr_quadrature(const tsrelay::SystemParams& p, double rho) {
  const double pl1 = std::pow(p.d1, p.m);
  const double pl2 = std::pow(p.d2, p.m);
  const double u0 = std::pow(2.0, 3.0 * p.R0 / (1.0 - rho)) - 1.0;
  const double s_r1 = p.noise.relay_antenna[0] + p.noise.relay_conversion[0];
  const double s_r2 = p.noise.relay_antenna[1] + p.noise.relay_conversion[1];
  const double s_u1 = p.noise.user_antenna[0] + p.noise.user_conversion[0];
  const double s_u2 = p.noise.user_antenna[1] + p.noise.user_conversion[1];
  const double a = 3.0 * rho * p.eta * p.P1 / (2.0 * (1.0 - rho) * pl1);
  const double b = 3.0 * rho * p.eta * p.P2 / (2.0 * (1.0 - rho) * pl2);
  const double a0 = u0 * pl1 * s_r1 / p.P1;
  const double b0 = u0 * pl2 * s_r2 / p.P2;
  const auto& f = p.fading;
  const double up1 = integrate([&](double x) { return f.lambda_h1 * std::exp(-f.lambda_h1 * x); }, a0, kInf);
  const double up2 = integrate([&](double x) { return f.lambda_h2 * std::exp(-f.lambda_h2 * x); }, b0, kInf);
  // w = min(f1 / (pl1 s_u1), f2 / (pl2 s_u2)) is exponential with this rate
  const double w_rate = pl1 * s_u1 * f.lambda_f1 + pl2 * s_u2 * f.lambda_f2;
  const double bc = expect_inverse_exp_2d(w_rate * u0, a, b, f.lambda_h1, f.lambda_h2);
  return 1.0 - up1 * up2 * bc;
}

/// TSFPR outage as 1 - Pr[h1 >= a0] Pr[h2 >= b0] Pr[f2 >= c0 / z_ab] Pr[f1 >= d0 / z_cd].
inline double outage_tsfpr_quadrature(const tsrelay::SystemParams& p, double rho, double theta) {
  const double pl1 = std::pow(p.d1, p.m);
  const double pl2 = std::pow(p.d2, p.m);
  const double u0 = std::pow(2.0, 4.0 * p.R0 / (1.0 - rho)) - 1.0;
  const double s_r1 = p.noise.relay_antenna[0] + p.noise.relay_conversion[0];
  const double s_r2 = p.noise.relay_antenna[1] + p.noise.relay_conversion[1];
  const double s_u1 = p.noise.user_antenna[0] + p.noise.user_conversion[0];
  const double s_u2 = p.noise.user_antenna[1] + p.noise.user_conversion[1];
  const double k = 2.0 * rho * p.eta / (1.0 - rho);
  const double a = (1.0 - theta) * k * p.P1 / pl1;
  const double b = (1.0 - theta) * k * p.P2 / pl2;
  const double c = theta * k * p.P1 / pl1;
  const double d = theta * k * p.P2 / pl2;
  const auto& f = p.fading;
  const double up = std::exp(-f.lambda_h1 * u0 * pl1 * s_r1 / p.P1 - f.lambda_h2 * u0 * pl2 * s_r2 / p.P2);
  const double to_u2 = expect_inverse_exp_2d(f.lambda_f2 * u0 * pl2 * s_u2, a, b, f.lambda_h1, f.lambda_h2);
  const double to_u1 = expect_inverse_exp_2d(f.lambda_f1 * u0 * pl1 * s_u1, c, d, f.lambda_h1, f.lambda_h2);
  return 1.0 - up * to_u2 * to_u1;
}

/// Exact probability that no TSNCR link fails in the same realization (the joint
/// event, not the product of marginals). Exponential memorylessness turns the
/// conditioning on h1 >= a0, h2 >= b0 into a shift of the relay power.
inline double joint_success_tsncr(const tsrelay::SystemParams& p, double rho) {
  const double pl1 = std::pow(p.d1, p.m);
  const double pl2 = std::pow(p.d2, p.m);
  const double u0 = std::pow(2.0, 3.0 * p.R0 / (1.0 - rho)) - 1.0;
  const double a = 3.0 * rho * p.eta * p.P1 / (2.0 * (1.0 - rho) * pl1);
  const double b = 3.0 * rho * p.eta * p.P2 / (2.0 * (1.0 - rho) * pl2);
  const double a0 = u0 * pl1 * (p.noise.relay_antenna[0] + p.noise.relay_conversion[0]) / p.P1;
  const double b0 = u0 * pl2 * (p.noise.relay_antenna[1] + p.noise.relay_conversion[1]) / p.P2;
  const auto& f = p.fading;
  const double w_rate = pl1 * (p.noise.user_antenna[0] + p.noise.user_conversion[0]) * f.lambda_f1 +
                        pl2 * (p.noise.user_antenna[1] + p.noise.user_conversion[1]) * f.lambda_f2;
  return std::exp(-f.lambda_h1 * a0 - f.lambda_h2 * b0) *
         expect_inverse_exp_2d(w_rate * u0, a, b, f.lambda_h1, f.lambda_h2, a * a0 + b * b0);
}

}  // namespace oracle
