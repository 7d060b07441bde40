#include "tsrelay/errors.hpp"
#include "tsrelay/kernels/event_count.hpp"

namespace tsrelay::kernels {

namespace {

void require_available(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) {
    throw ParameterError("AVX2 kernels requested but not available on this build or CPU");
  }
}

}  // namespace

void count_events(Isa isa, const TsncrEvents& ev, const ChannelBlock& block, EventCounts& out) {
  require_available(isa);
#if defined(TSRELAY_HAVE_AVX2)
  if (isa == Isa::avx2) return count_tsncr_avx2(ev, block, out);
#endif
  count_tsncr_scalar(ev, block, out);
}

void count_events(Isa isa, const TsfprEvents& ev, const ChannelBlock& block, EventCounts& out) {
  require_available(isa);
#if defined(TSRELAY_HAVE_AVX2)
  if (isa == Isa::avx2) return count_tsfpr_avx2(ev, block, out);
#endif
  count_tsfpr_scalar(ev, block, out);
}

}  // namespace tsrelay::kernels
