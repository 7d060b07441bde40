#include <algorithm>

#include "tsrelay/kernels/event_count.hpp"

namespace tsrelay::kernels {

namespace {

template <std::size_t N>
void accumulate(const std::array<bool, N>& hit, EventCounts& out) {
  bool all = true;
  for (std::size_t i = 0; i < N; ++i) {
    out.single[i] += hit[i];
    all = all && hit[i];
    for (std::size_t j = i + 1; j < N; ++j) out.pair[i][j] += hit[i] && hit[j];
  }
  out.all += all;
}

}  // namespace

EventCounts& EventCounts::operator+=(const EventCounts& other) {
  draws += other.draws;
  all += other.all;
  for (std::size_t i = 0; i < kMaxIndicators; ++i) {
    single[i] += other.single[i];
    for (std::size_t j = 0; j < kMaxIndicators; ++j) pair[i][j] += other.pair[i][j];
  }
  return *this;
}

void count_tsncr_scalar(const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out) {
  const std::size_t n = block.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double h1 = block.h1[i];
    const double h2 = block.h2[i];
    const double z = ev.weight1 * h1 + ev.weight2 * h2;
    const double w = std::min(ev.gain1 * block.f1[i], ev.gain2 * block.f2[i]);
    accumulate<3>({h1 >= ev.h1_min, h2 >= ev.h2_min, w * z >= ev.snr_min}, out);
  }
  out.draws += n;
}

void count_tsfpr_scalar(const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out) {
  const std::size_t n = block.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double h1 = block.h1[i];
    const double h2 = block.h2[i];
    const double z_u2 = ev.a * h1 + ev.b * h2;
    const double z_u1 = ev.c * h1 + ev.d * h2;
    accumulate<4>({h1 >= ev.h1_min, h2 >= ev.h2_min, block.f2[i] * z_u2 >= ev.to_u2_min,
                   block.f1[i] * z_u1 >= ev.to_u1_min},
                  out);
  }
  out.draws += n;
}

}  // namespace tsrelay::kernels
