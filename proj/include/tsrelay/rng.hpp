#pragma once

#include <cstdint>
#include <random>

#include "tsrelay/params.hpp"

namespace tsrelay {

/// One step of SplitMix64; advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of substream `stream` derived from a master seed: the (stream + 1)-th
/// SplitMix64 output started from `master`. Substreams of one master never collide
/// for stream < 2^64 because SplitMix64 is a bijection of its counter.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream);

/// MT19937-64 with explicit, portable uniform and exponential transforms
/// (the standard distributions are implementation-defined, this is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Exponential with the given rate by inverse CDF: -log(1 - U) / rate.
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

/// Four independent exponential power gains, drawn in the order h1, h2, f1, f2.
ChannelDraw sample_channels(const FadingModel& fading, Rng& rng);

}  // namespace tsrelay
