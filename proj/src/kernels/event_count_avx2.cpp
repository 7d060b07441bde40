// Compiled with -mavx2; only reached after avx2_available() returned true.

#include <immintrin.h>

#include <bit>

#include "tsrelay/kernels/event_count.hpp"

namespace tsrelay::kernels {

namespace {

constexpr std::size_t kLanes = 4;

inline unsigned ge_mask(__m256d lhs, __m256d rhs) {
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(lhs, rhs, _CMP_GE_OQ)));
}

template <std::size_t N>
inline void accumulate(const std::array<unsigned, N>& mask, EventCounts& out) {
  unsigned all = 0xF;
  for (std::size_t i = 0; i < N; ++i) {
    out.single[i] += std::popcount(mask[i]);
    all &= mask[i];
    for (std::size_t j = i + 1; j < N; ++j) out.pair[i][j] += std::popcount(mask[i] & mask[j]);
  }
  out.all += std::popcount(all);
}

ChannelBlock tail_of(const ChannelBlock& block, std::size_t from) {
  return {block.h1.subspan(from), block.h2.subspan(from), block.f1.subspan(from), block.f2.subspan(from)};
}

}  // namespace

void count_tsncr_avx2(const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out) {
  const std::size_t n = block.size();
  const std::size_t vec_end = n - n % kLanes;

  const __m256d h1_min = _mm256_set1_pd(ev.h1_min);
  const __m256d h2_min = _mm256_set1_pd(ev.h2_min);
  const __m256d w1 = _mm256_set1_pd(ev.weight1);
  const __m256d w2 = _mm256_set1_pd(ev.weight2);
  const __m256d g1 = _mm256_set1_pd(ev.gain1);
  const __m256d g2 = _mm256_set1_pd(ev.gain2);
  const __m256d snr_min = _mm256_set1_pd(ev.snr_min);

  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256d h1 = _mm256_loadu_pd(&block.h1[i]);
    const __m256d h2 = _mm256_loadu_pd(&block.h2[i]);
    const __m256d z = _mm256_add_pd(_mm256_mul_pd(w1, h1), _mm256_mul_pd(w2, h2));
    // min(a, b) returns b unless a < b, matching std::min(a, b) for non-NaN input
    const __m256d w = _mm256_min_pd(_mm256_mul_pd(g1, _mm256_loadu_pd(&block.f1[i])),
                                    _mm256_mul_pd(g2, _mm256_loadu_pd(&block.f2[i])));
    accumulate<3>({ge_mask(h1, h1_min), ge_mask(h2, h2_min), ge_mask(_mm256_mul_pd(w, z), snr_min)}, out);
  }
  out.draws += vec_end;
  if (vec_end < n) count_tsncr_scalar(ev, tail_of(block, vec_end), out);
}

void count_tsfpr_avx2(const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out) {
  const std::size_t n = block.size();
  const std::size_t vec_end = n - n % kLanes;

  const __m256d h1_min = _mm256_set1_pd(ev.h1_min);
  const __m256d h2_min = _mm256_set1_pd(ev.h2_min);
  const __m256d a = _mm256_set1_pd(ev.a);
  const __m256d b = _mm256_set1_pd(ev.b);
  const __m256d c = _mm256_set1_pd(ev.c);
  const __m256d d = _mm256_set1_pd(ev.d);
  const __m256d to_u2_min = _mm256_set1_pd(ev.to_u2_min);
  const __m256d to_u1_min = _mm256_set1_pd(ev.to_u1_min);

  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256d h1 = _mm256_loadu_pd(&block.h1[i]);
    const __m256d h2 = _mm256_loadu_pd(&block.h2[i]);
    const __m256d z_u2 = _mm256_add_pd(_mm256_mul_pd(a, h1), _mm256_mul_pd(b, h2));
    const __m256d z_u1 = _mm256_add_pd(_mm256_mul_pd(c, h1), _mm256_mul_pd(d, h2));
    const __m256d f1 = _mm256_loadu_pd(&block.f1[i]);
    const __m256d f2 = _mm256_loadu_pd(&block.f2[i]);
    accumulate<4>({ge_mask(h1, h1_min), ge_mask(h2, h2_min), ge_mask(_mm256_mul_pd(f2, z_u2), to_u2_min),
                   ge_mask(_mm256_mul_pd(f1, z_u1), to_u1_min)},
                  out);
  }
  out.draws += vec_end;
  if (vec_end < n) count_tsfpr_scalar(ev, tail_of(block, vec_end), out);
}

}  // namespace tsrelay::kernels
