#include "tsrelay/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "tsrelay/errors.hpp"
#include "tsrelay/outage.hpp"
#include "tsrelay/rng.hpp"

namespace tsrelay {

namespace {

constexpr std::size_t kBlock = 4096;

double rate_threshold(double r0, double rho, int phases) {
  // prefactor * log2(1 + snr) >= R0  <=>  snr >= 2^(phases R0 / (1 - rho)) - 1
  return std::expm1(std::numbers::ln2 * phases * r0 / (1.0 - rho));
}

template <typename Events>
kernels::EventCounts run_worker(const FadingModel& fading, const Events& events, kernels::Isa isa,
                                std::uint64_t seed, std::uint64_t n) {
  Rng rng(seed);
  std::vector<double> h1(kBlock), h2(kBlock), f1(kBlock), f2(kBlock);
  kernels::EventCounts counts;
  for (std::uint64_t done = 0; done < n;) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, n - done));
    for (std::size_t i = 0; i < len; ++i) {
      const ChannelDraw d = sample_channels(fading, rng);
      h1[i] = d.h1sq;
      h2[i] = d.h2sq;
      f1[i] = d.f1sq;
      f2[i] = d.f2sq;
    }
    const kernels::ChannelBlock block{{h1.data(), len}, {h2.data(), len}, {f1.data(), len}, {f2.data(), len}};
    kernels::count_events(isa, events, block, counts);
    done += len;
  }
  return counts;
}

template <typename Events>
kernels::EventCounts run_all(const FadingModel& fading, const Events& events, const McConfig& mc) {
  const kernels::Isa isa = mc.isa.value_or(kernels::best_isa());
  const std::uint64_t base = mc.n_samples / mc.workers;
  const std::uint64_t extra = mc.n_samples % mc.workers;
  auto share = [&](unsigned w) { return base + (w < extra ? 1 : 0); };

  std::vector<kernels::EventCounts> partial(mc.workers);
  if (mc.workers == 1) {
    partial[0] = run_worker(fading, events, isa, derive_stream_seed(mc.seed, 0), share(0));
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(mc.workers);
    for (unsigned w = 0; w < mc.workers; ++w) {
      threads.emplace_back([&, w] {
        partial[w] = run_worker(fading, events, isa, derive_stream_seed(mc.seed, w), share(w));
      });
    }
  }
  kernels::EventCounts total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

void McConfig::validate() const {
  if (n_samples < 1) throw ParameterError("n_samples must be >= 1");
  if (workers < 1) throw ParameterError("workers must be >= 1");
  if (isa == kernels::Isa::avx2 && !kernels::avx2_available()) {
    throw ParameterError("AVX2 kernels requested but not available");
  }
}

kernels::TsncrEvents make_tsncr_events(const SystemParams& params, double rho) {
  const double pl1 = params.path_loss(Link::first);
  const double pl2 = params.path_loss(Link::second);
  const double u0 = rate_threshold(params.R0, rho, 3);
  const double gain = 3.0 * rho * params.eta / (2.0 * (1.0 - rho));
  kernels::TsncrEvents ev;
  ev.h1_min = u0 * pl1 * params.noise.relay_total(Link::first) / params.P1;
  ev.h2_min = u0 * pl2 * params.noise.relay_total(Link::second) / params.P2;
  ev.weight1 = gain * params.P1 / pl1;
  ev.weight2 = gain * params.P2 / pl2;
  ev.gain1 = 1.0 / (pl1 * params.noise.user_total(Link::first));
  ev.gain2 = 1.0 / (pl2 * params.noise.user_total(Link::second));
  ev.snr_min = u0;
  return ev;
}

kernels::TsfprEvents make_tsfpr_events(const SystemParams& params, double rho, double theta) {
  const double pl1 = params.path_loss(Link::first);
  const double pl2 = params.path_loss(Link::second);
  const double u0 = rate_threshold(params.R0, rho, 4);
  const double gain = 2.0 * rho * params.eta / (1.0 - rho);
  kernels::TsfprEvents ev;
  ev.h1_min = u0 * pl1 * params.noise.relay_total(Link::first) / params.P1;
  ev.h2_min = u0 * pl2 * params.noise.relay_total(Link::second) / params.P2;
  ev.a = (1.0 - theta) * gain * params.P1 / pl1;
  ev.b = (1.0 - theta) * gain * params.P2 / pl2;
  ev.c = theta * gain * params.P1 / pl1;
  ev.d = theta * gain * params.P2 / pl2;
  ev.to_u2_min = u0 * pl2 * params.noise.user_total(Link::second);
  ev.to_u1_min = u0 * pl1 * params.noise.user_total(Link::first);
  return ev;
}

McEstimate estimate_from_counts(const kernels::EventCounts& counts, std::size_t factors) {
  if (counts.draws == 0) throw ParameterError("no draws to estimate from");
  if (factors < 1 || factors > kernels::kMaxIndicators) throw ParameterError("factor count out of range");
  const double n = static_cast<double>(counts.draws);

  std::array<double, kernels::kMaxIndicators> q{};
  double success = 1.0;
  for (std::size_t i = 0; i < factors; ++i) {
    q[i] = static_cast<double>(counts.single[i]) / n;
    success *= q[i];
  }

  // d(prod q) / d q_i
  std::array<double, kernels::kMaxIndicators> grad{};
  for (std::size_t i = 0; i < factors; ++i) {
    grad[i] = 1.0;
    for (std::size_t k = 0; k < factors; ++k) {
      if (k != i) grad[i] *= q[k];
    }
  }
  double var = 0.0;
  for (std::size_t i = 0; i < factors; ++i) {
    var += grad[i] * grad[i] * q[i] * (1.0 - q[i]);
    for (std::size_t j = i + 1; j < factors; ++j) {
      const double cov = static_cast<double>(counts.pair[i][j]) / n - q[i] * q[j];
      var += 2.0 * grad[i] * grad[j] * cov;
    }
  }

  McEstimate est;
  est.p_hat = 1.0 - success;
  est.std_err = std::sqrt(std::max(0.0, var) / n);
  est.p_joint = 1.0 - static_cast<double>(counts.all) / n;
  est.std_err_joint = std::sqrt(est.p_joint * (1.0 - est.p_joint) / n);
  est.n_samples = counts.draws;
  return est;
}

McEstimate estimate_outage(const SystemParams& params, const ProtocolConfig& config, const McConfig& mc) {
  params.validate();
  config.validate();
  mc.validate();

  McEstimate est;
  if (config.rho == 1.0) {
    est.n_samples = mc.n_samples;
  } else if (config.kind == Protocol::tsncr) {
    est = estimate_from_counts(run_all(params.fading, make_tsncr_events(params, config.rho), mc),
                               kernels::TsncrEvents::count);
  } else {
    est = estimate_from_counts(
        run_all(params.fading, make_tsfpr_events(params, config.rho, config.theta), mc),
        kernels::TsfprEvents::count);
  }
  est.seed = mc.seed;
  est.workers = mc.workers;
  return est;
}

CapacityEstimate estimate_capacity(const SystemParams& params, const ProtocolConfig& config,
                                   const McConfig& mc) {
  CapacityEstimate out;
  out.outage = estimate_outage(params, config, mc);
  out.capacity = outage_capacity(params, config, out.outage.p_hat);
  // capacity is affine in p_hat
  out.std_err = outage_capacity(params, config, 0.0) * out.outage.std_err;
  return out;
}

}  // namespace tsrelay
