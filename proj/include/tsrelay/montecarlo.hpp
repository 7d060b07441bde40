#pragma once

#include <cstdint>
#include <optional>

#include "tsrelay/kernels/event_count.hpp"
#include "tsrelay/params.hpp"

namespace tsrelay {

struct McConfig {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Forces a kernel; unset picks the widest available.
  std::optional<kernels::Isa> isa;

  void validate() const;
};

/// Outage estimate from channel sampling.
///
/// `p_hat` multiplies the per-link success frequencies, i.e. it estimates the
/// product of marginal probabilities that the closed forms evaluate; `std_err`
/// is its delta-method standard error. `p_joint` is the plain frequency of
/// draws in which any link fails (outage_event), with binomial `std_err_joint`.
/// The two differ because the relay power and the uplinks share h1, h2.
struct McEstimate {
  double p_hat = 1.0;
  double std_err = 0.0;
  double p_joint = 1.0;
  double std_err_joint = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct CapacityEstimate {
  double capacity = 0.0;
  double std_err = 0.0;
  McEstimate outage;
};

/// Success indicators of TSNCR (rho < 1) expressed as thresholds on the gains.
kernels::TsncrEvents make_tsncr_events(const SystemParams& params, double rho);
/// Success indicators of TSFPR (rho < 1).
kernels::TsfprEvents make_tsfpr_events(const SystemParams& params, double rho, double theta);

/// Product-of-frequencies estimate and delta-method standard error from raw counts.
/// `factors` is the number of indicators that enter the product.
McEstimate estimate_from_counts(const kernels::EventCounts& counts, std::size_t factors);

/// Draws are split into `workers` contiguous shares (the first n % workers get one
/// extra); worker w samples from MT19937-64 seeded with derive_stream_seed(seed, w).
/// Results are bit-identical for fixed (seed, n_samples, workers). rho == 1 maps
/// to p_hat = 1 with zero error.
McEstimate estimate_outage(const SystemParams& params, const ProtocolConfig& config, const McConfig& mc);

CapacityEstimate estimate_capacity(const SystemParams& params, const ProtocolConfig& config,
                                   const McConfig& mc);

}  // namespace tsrelay
