#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tsrelay/bessel.hpp"
#include "tsrelay/errors.hpp"
#include "tsrelay/montecarlo.hpp"
#include "tsrelay/outage.hpp"
#include "tsrelay/rng.hpp"

using namespace tsrelay;

namespace {

SystemParams random_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SystemParams p;
  p.P1 = 0.5 + 1.5 * u(gen);
  p.P2 = 0.5 + 1.5 * u(gen);
  p.d1 = 0.4 + 1.2 * u(gen);
  p.d2 = 0.4 + 1.2 * u(gen);
  p.m = 2.0 + 1.5 * u(gen);
  p.eta = 0.5 + 0.5 * u(gen);
  p.R0 = 0.1 + 0.6 * u(gen);
  for (int i = 0; i < 2; ++i) {
    p.noise.relay_antenna[i] = 0.002 + 0.01 * u(gen);
    p.noise.relay_conversion[i] = 0.002 + 0.01 * u(gen);
    p.noise.user_antenna[i] = 0.002 + 0.01 * u(gen);
    p.noise.user_conversion[i] = 0.002 + 0.01 * u(gen);
  }
  p.fading.lambda_h1 = 0.5 + u(gen);
  p.fading.lambda_h2 = 0.5 + u(gen);
  p.fading.lambda_f1 = 0.5 + u(gen);
  p.fading.lambda_f2 = 0.5 + u(gen);
  return p;
}

double equal_limit(double beta, double rate) {
  const double x = 2.0 * std::sqrt(beta * rate);
  return 2.0 * beta * rate * special::bessel_k2(x);
}

}  // namespace

TEST_CASE("pdf of a weighted exponential sum") {
  SUBCASE("equal unit weights give Gamma(2, 1)") {
    for (double z : {0.0, 0.1, 1.0, 2.5, 10.0}) {
      CHECK(pdf_weighted_exp_sum({1.0, 1.0, 1.0, 1.0}, z) == doctest::Approx(z * std::exp(-z)).epsilon(1e-15));
    }
  }
  SUBCASE("integrates to one") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int k = 0; k < 10; ++k) {
      const WeightedExpSum s{u(gen), u(gen), u(gen), u(gen)};
      const double total = oracle::integrate([&](double z) { return pdf_weighted_exp_sum(s, z); }, 0.0, oracle::kInf);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      const double z = u(gen);
      CHECK(pdf_weighted_exp_sum(s, z) ==
            doctest::Approx(oracle::density_distinct(s.a, s.b, s.lambda1, s.lambda2, z)).epsilon(1e-9));
    }
  }
  SUBCASE("matches a histogram of samples") {
    const WeightedExpSum s{0.7, 1.6, 1.2, 0.8};
    Rng rng(99);
    constexpr int n = 400000;
    constexpr double width = 0.25;
    std::vector<int> bins(24, 0);
    for (int i = 0; i < n; ++i) {
      const double z = s.a * rng.exponential(s.lambda1) + s.b * rng.exponential(s.lambda2);
      const auto idx = static_cast<std::size_t>(z / width);
      if (idx < bins.size()) ++bins[idx];
    }
    for (std::size_t i = 0; i < bins.size(); ++i) {
      const double lo = width * static_cast<double>(i);
      const double p = oracle::integrate([&](double z) { return pdf_weighted_exp_sum(s, z); }, lo, lo + width);
      const double sd = std::sqrt(p * (1.0 - p) / n);
      CAPTURE(i);
      CHECK(std::abs(bins[i] / static_cast<double>(n) - p) < 5.0 * sd + 1e-6);
    }
  }
  CHECK_THROWS_AS(pdf_weighted_exp_sum({1.0, 1.0, 1.0, 1.0}, -0.1), DomainError);
  CHECK_THROWS_AS(pdf_weighted_exp_sum({0.0, 1.0, 1.0, 1.0}, 1.0), ParameterError);
}

TEST_CASE("cdf of the weaker downlink gain") {
  SystemParams p;
  p.d1 = p.d2 = 1.0;
  p.noise.user_antenna = {0.5, 0.5};
  p.noise.user_conversion = {0.5, 0.5};
  CHECK(cdf_min_weighted(p, 0.0) == 0.0);
  for (double w : {0.1, 0.5, 1.0, 3.0}) CHECK(cdf_min_weighted(p, w) == doctest::Approx(1.0 - std::exp(-2.0 * w)));
  CHECK_THROWS_AS(cdf_min_weighted(p, -1.0), DomainError);

  SUBCASE("empirical") {
    std::mt19937_64 gen(4);
    const SystemParams q = random_params(gen);
    Rng rng(8);
    constexpr int n = 200000;
    const double g1 = 1.0 / (q.path_loss(Link::first) * q.noise.user_total(Link::first));
    const double g2 = 1.0 / (q.path_loss(Link::second) * q.noise.user_total(Link::second));
    std::vector<double> w(n);
    for (auto& v : w) {
      const ChannelDraw d = sample_channels(q.fading, rng);
      v = std::min(g1 * d.f1sq, g2 * d.f2sq);
    }
    const double median = 0.0 + std::log(2.0) / (1.0 / g1 * q.fading.lambda_f1 + 1.0 / g2 * q.fading.lambda_f2);
    for (double t : {0.25 * median, median, 3.0 * median}) {
      double below = 0;
      for (double v : w) below += v <= t;
      CHECK(std::abs(below / n - cdf_min_weighted(q, t)) < 0.005);
    }
  }
}

TEST_CASE("tail integral") {
  CHECK(tail_integral(0.0, {1.0, 2.0, 1.0, 1.0}).probability == 1.0);
  CHECK(tail_integral(oracle::kInf, {1.0, 2.0, 1.0, 1.0}).probability == 0.0);
  CHECK(tail_integral(1e6, {1e-3, 1e-3, 1.0, 1.0}).probability == 0.0);
  CHECK(tail_integral(1.0, {1.0, 1.0, 1.0, 1.0}).equal_branch);
  CHECK_FALSE(tail_integral(1.0, {1.0, 1.0 + 1e-8, 1.0, 1.0}).equal_branch);
  CHECK_THROWS_AS(tail_integral(-1.0, {1.0, 1.0, 1.0, 1.0}), ParameterError);

  SUBCASE("against 1-D and 2-D quadrature") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int k = 0; k < 10; ++k) {
      const WeightedExpSum s{u(gen), u(gen), u(gen), u(gen)};
      const double beta = 0.05 * u(gen);
      const double got = tail_integral(beta, s).probability;
      CAPTURE(k);
      CHECK(std::abs(got - oracle::tail_1d(beta, s.a, s.b, s.lambda1, s.lambda2)) < 1e-8);
      CHECK(std::abs(got - oracle::expect_inverse_exp_2d(beta, s.a, s.b, s.lambda1, s.lambda2)) < 1e-8);
    }
  }

  SUBCASE("equal rates approach the K2 limit") {
    for (double beta : {0.01, 0.3, 2.0}) {
      const double limit = equal_limit(beta, 1.5);
      CHECK(tail_integral(beta, {1.0, 1.0, 1.5, 1.5}).probability == doctest::Approx(limit).epsilon(1e-14));
      for (double eps : {1e-3, 1e-4, 1e-5}) {
        const double v = tail_integral(beta, {1.0, 1.0 + eps, 1.5, 1.5}).probability;
        CAPTURE(eps);
        CHECK(std::abs(v - limit) < 10.0 * eps * limit);
      }
    }
  }

  SUBCASE("series and closed form agree with quadrature at the window edge") {
    for (double beta : {0.001, 0.1, 1.0, 20.0}) {
      for (double gap : {1.999e-3, 2.001e-3}) {
        const WeightedExpSum s{1.0, 1.0, 2.0, 2.0 * (1.0 - gap)};
        CAPTURE(beta);
        CAPTURE(gap);
        CHECK(std::abs(tail_integral(beta, s).probability -
                       oracle::expect_inverse_exp_2d(beta, 1.0, 1.0, s.lambda1, s.lambda2)) < 1e-10);
      }
    }
  }
}

TEST_CASE("closed-form outage against quadrature") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> u(0.05, 0.6);
  for (int k = 0; k < 6; ++k) {
    const SystemParams p = random_params(gen);
    const double rho = u(gen);
    const double theta = 0.2 + u(gen);
    CAPTURE(k);
    CHECK(std::abs(outage_tsncr(p, rho).probability - oracle::outage_tsncr_quadrature(p, rho)) < 1e-8);
    CHECK(std::abs(outage_tsfpr(p, rho, theta).probability - oracle::outage_tsfpr_quadrature(p, rho, theta)) < 1e-8);
  }
}

TEST_CASE("branch labels") {
  SystemParams p;
  CHECK(outage_tsncr(p, 0.3).branch == Branch::equal);
  CHECK(outage_tsfpr(p, 0.3, 0.5).branch == Branch::equal_equal);
  p.P2 = 1.5;
  CHECK(outage_tsncr(p, 0.3).branch == Branch::general);
  CHECK(outage_tsfpr(p, 0.3, 0.5).branch == Branch::general_general);
  p = {};
  p.fading.lambda_h2 = 2.0;
  p.P2 = 2.0;
  CHECK(outage_tsncr(p, 0.3).branch == Branch::equal);
  CHECK(outage_tsncr(p, 0.0).branch == Branch::degenerate);
  CHECK(to_string(Branch::general_equal) == "general-equal");
}

TEST_CASE("degenerate limits") {
  std::mt19937_64 gen(51);
  for (int k = 0; k < 20; ++k) {
    SystemParams p = random_params(gen);
    CHECK(outage_tsncr(p, 0.0).probability == 1.0);
    CHECK(outage_tsncr(p, 1.0).probability == 1.0);
    CHECK(outage_tsfpr(p, 0.0, 0.5).probability == 1.0);
    CHECK(outage_tsfpr(p, 0.4, 0.0).probability == 1.0);
    CHECK(outage_tsfpr(p, 0.4, 1.0).probability == 1.0);
    p.R0 = 0.0;
    CHECK(outage_tsncr(p, 0.4).probability == 0.0);
    CHECK(outage_tsfpr(p, 0.4, 0.3).probability == 0.0);
  }
  CHECK_THROWS_AS(outage_tsncr(SystemParams{}, 1.2), ParameterError);
  CHECK_THROWS_AS(outage_tsfpr(SystemParams{}, 0.5, -0.2), ParameterError);
}

TEST_CASE("theta swap symmetry") {
  std::mt19937_64 gen(61);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int k = 0; k < 50; ++k) {
    SystemParams p = random_params(gen);
    SystemParams q = p;
    std::swap(q.P1, q.P2);
    std::swap(q.d1, q.d2);
    std::swap(q.noise.relay_antenna[0], q.noise.relay_antenna[1]);
    std::swap(q.noise.relay_conversion[0], q.noise.relay_conversion[1]);
    std::swap(q.noise.user_antenna[0], q.noise.user_antenna[1]);
    std::swap(q.noise.user_conversion[0], q.noise.user_conversion[1]);
    std::swap(q.fading.lambda_h1, q.fading.lambda_h2);
    std::swap(q.fading.lambda_f1, q.fading.lambda_f2);
    const double rho = u(gen);
    const double theta = u(gen);
    CHECK(outage_tsfpr(p, rho, theta).probability ==
          doctest::Approx(outage_tsfpr(q, rho, 1.0 - theta).probability).epsilon(1e-12));
    CHECK(outage_tsncr(p, rho).probability == doctest::Approx(outage_tsncr(q, rho).probability).epsilon(1e-12));
  }
}

TEST_CASE("outage grows with the target rate") {
  std::mt19937_64 gen(71);
  for (int k = 0; k < 20; ++k) {
    SystemParams p = random_params(gen);
    double last_ncr = 0.0;
    double last_fpr = 0.0;
    for (double r = 0.0; r <= 2.0; r += 0.1) {
      p.R0 = r;
      const double ncr = outage_tsncr(p, 0.3).probability;
      const double fpr = outage_tsfpr(p, 0.3, 0.4).probability;
      CHECK(ncr >= last_ncr);
      CHECK(fpr >= last_fpr);
      last_ncr = ncr;
      last_fpr = fpr;
    }
  }
}

TEST_CASE("outage capacity") {
  SystemParams p;
  CHECK(outage_capacity(p, {Protocol::tsncr, 0.25, 0.5}, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(outage_capacity(p, {Protocol::tsfpr, 0.25, 0.5}, 0.0) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(outage_capacity(p, {Protocol::tsfpr, 0.25, 0.5}, 1.0) == 0.0);
  CHECK(outage_capacity(p, {Protocol::tsncr, 1.0, 0.5}, 0.0) == 0.0);
  std::mt19937_64 gen(81);
  std::uniform_real_distribution<double> u(0.0, 0.99);
  for (int k = 0; k < 50; ++k) {
    const double rho = u(gen);
    const double pout = u(gen);
    CHECK(outage_capacity(p, {Protocol::tsncr, rho, 0.5}, pout) /
              outage_capacity(p, {Protocol::tsfpr, rho, 0.5}, pout) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("default setup against a frozen sampling reference") {
  // 10^7 draws of the product-of-frequencies estimator computed with numpy's
  // PCG64 (seed 20261015): 0.741597818185167, standard error 1.267e-4.
  const double p = outage_tsncr(SystemParams{}, 0.19).probability;
  CHECK(std::abs(p - 0.741597818185167) < 4.0 * 1.267305576094054e-4);
}
