#pragma once

#include <cstdint>

/**
 * Thread-local transient-allocation probe. The library overrides the global
 * allocation functions to keep per-thread counters of live heap bytes
 * (measured with malloc_usable_size, so allocator rounding is included).
 * reset() marks a baseline; peak_delta() reports the highest excess of live
 * bytes over that baseline since the reset. Used to report the peak
 * transient footprint of a solve; values are environment-dependent and are
 * never asserted against.
 */
namespace ggfnsp::memprobe {

void reset();
std::uint64_t peak_delta();

}  // namespace ggfnsp::memprobe
