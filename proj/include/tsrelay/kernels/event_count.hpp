#pragma once

// Counting kernels behind the Monte Carlo estimator.
//
// A block of channel draws is stored column-wise; each kernel evaluates the
// per-link success indicators of one protocol for every draw and accumulates
// how often each indicator, each pair of indicators and all of them together
// hold. The scalar kernels are the reference; the AVX2 kernels perform the same
// multiplies, adds, min and compares lane-wise (no FMA), so the counts agree
// exactly.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tsrelay::kernels {

inline constexpr std::size_t kMaxIndicators = 4;

struct EventCounts {
  std::uint64_t draws = 0;
  std::array<std::uint64_t, kMaxIndicators> single{};
  /// pair[i][j], i < j: both indicators i and j held.
  std::array<std::array<std::uint64_t, kMaxIndicators>, kMaxIndicators> pair{};
  /// every indicator held
  std::uint64_t all = 0;

  EventCounts& operator+=(const EventCounts& other);
  friend bool operator==(const EventCounts&, const EventCounts&) = default;
};

struct ChannelBlock {
  std::span<const double> h1;
  std::span<const double> h2;
  std::span<const double> f1;
  std::span<const double> f2;

  std::size_t size() const { return h1.size(); }
};

/// TSNCR success indicators:
///   0: h1 >= h1_min   1: h2 >= h2_min
///   2: min(gain1 f1, gain2 f2) * (weight1 h1 + weight2 h2) >= snr_min
struct TsncrEvents {
  double h1_min = 0.0;
  double h2_min = 0.0;
  double weight1 = 0.0;
  double weight2 = 0.0;
  double gain1 = 0.0;
  double gain2 = 0.0;
  double snr_min = 0.0;
  static constexpr std::size_t count = 3;
};

/// TSFPR success indicators:
///   0: h1 >= h1_min   1: h2 >= h2_min
///   2: f2 (a h1 + b h2) >= to_u2_min   3: f1 (c h1 + d h2) >= to_u1_min
struct TsfprEvents {
  double h1_min = 0.0;
  double h2_min = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double to_u2_min = 0.0;
  double to_u1_min = 0.0;
  static constexpr std::size_t count = 4;
};

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when this build carries the AVX2 kernels and the CPU executes them.
bool avx2_available();

/// Widest instruction set usable on this machine.
Isa best_isa();

void count_tsncr_scalar(const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out);
void count_tsfpr_scalar(const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out);

#if defined(TSRELAY_HAVE_AVX2)
void count_tsncr_avx2(const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out);
void count_tsfpr_avx2(const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out);
#endif

/// Runs the kernel for `isa`. Throws ParameterError if that ISA is unavailable.
void count_events(Isa isa, const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out);
void count_events(Isa isa, const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out);

}  // namespace tsrelay::kernels
