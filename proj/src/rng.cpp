#include "tsrelay/rng.hpp"

#include <cmath>

namespace tsrelay {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master + stream * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

double Rng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

ChannelDraw sample_channels(const FadingModel& fading, Rng& rng) {
  ChannelDraw draw;
  draw.h1sq = rng.exponential(fading.lambda_h1);
  draw.h2sq = rng.exponential(fading.lambda_h2);
  draw.f1sq = rng.exponential(fading.lambda_f1);
  draw.f2sq = rng.exponential(fading.lambda_f2);
  return draw;
}

}  // namespace tsrelay
