#include <cstdio>
#include <cstdlib>
#include <string>

#include "ggfnsp/kernels.hpp"

namespace ggfnsp::kernels {

namespace detail {
#ifdef GGFNSP_HAVE_AVX2_TU
const Backend& avx2_backend();  // defined in kernels_avx2.cpp
#endif
}  // namespace detail

bool avx2_available() {
#ifdef GGFNSP_HAVE_AVX2_TU
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Backend* avx2() {
#ifdef GGFNSP_HAVE_AVX2_TU
  if (avx2_available()) {
    return &detail::avx2_backend();
  }
#endif
  return nullptr;
}

namespace {

const Backend& select_active() {
  const char* env = std::getenv("GGFNSP_KERNELS");
  const std::string choice = env != nullptr ? env : "auto";
  if (choice == "scalar") {
    return scalar();
  }
  if (choice == "avx2") {
    if (const Backend* b = avx2()) {
      return *b;
    }
    std::fprintf(stderr,
                 "ggfnsp: GGFNSP_KERNELS=avx2 requested but AVX2+FMA is "
                 "unavailable; falling back to scalar kernels\n");
    return scalar();
  }
  if (choice != "auto") {
    std::fprintf(stderr,
                 "ggfnsp: unknown GGFNSP_KERNELS value '%s' (expected auto, "
                 "scalar, or avx2); using auto\n",
                 choice.c_str());
  }
  if (const Backend* b = avx2()) {
    return *b;
  }
  return scalar();
}

}  // namespace

const Backend& active() {
  static const Backend& backend = select_active();
  return backend;
}

}  // namespace ggfnsp::kernels
