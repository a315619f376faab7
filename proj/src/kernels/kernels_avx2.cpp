// AVX2+FMA backend. Compiled with -mavx2 -mfma; selected at runtime only on
// CPUs that report both features (see dispatch.cpp).

#if !defined(__AVX2__) || !defined(__FMA__)
#error "kernels_avx2.cpp must be compiled with -mavx2 -mfma"
#endif

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "ggfnsp/kernels.hpp"

namespace ggfnsp::kernels {
namespace detail {
namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kInvLn10 = 0.4342944819032518;  // 1 / ln(10)

// ---------------------------------------------------------------------------
// vlog_pd: 4-lane natural log for positive normal doubles.
//
// Classic fdlibm/e_log reduction: x = 2^k * m with m in [sqrt(2)/2, sqrt(2)),
// then ln(m) from the odd series in s = (m-1)/(m+1) with the fdlibm minimax
// coefficients, and ln(x) = k*ln2_hi + ln(m) + k*ln2_lo in split precision.
// Inputs are clamped to the smallest positive normal; sub-normals do not
// occur on the library's call paths (levels are epsilon-clipped, heights are
// nudged into (0,1)), so the clamp only guards against misuse.
// ---------------------------------------------------------------------------
inline __m256d vlog_pd(__m256d x) {
  const __m256d min_normal = _mm256_set1_pd(2.2250738585072014e-308);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_exp = _mm256_set1_epi64x(0x3FF0000000000000LL);
  const __m256i magic_i = _mm256_set1_epi64x(0x4330000000000000LL);
  const __m256d magic_d = _mm256_set1_pd(4503599627370496.0);  // 2^52
  const __m256d bias = _mm256_set1_pd(1023.0);
  const __m256d sqrt2 = _mm256_set1_pd(1.41421356237309514547);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lg1 = _mm256_set1_pd(6.666666666666735130e-01);
  const __m256d lg2 = _mm256_set1_pd(3.999999999940941908e-01);
  const __m256d lg3 = _mm256_set1_pd(2.857142874366239149e-01);
  const __m256d lg4 = _mm256_set1_pd(2.222219843214978396e-01);
  const __m256d lg5 = _mm256_set1_pd(1.818357216161805012e-01);
  const __m256d lg6 = _mm256_set1_pd(1.531383769920937332e-01);
  const __m256d lg7 = _mm256_set1_pd(1.479819860511658591e-01);

  x = _mm256_max_pd(x, min_normal);
  const __m256i ix = _mm256_castpd_si256(x);

  // k = unbiased exponent as double, via the 2^52 integer-in-double trick.
  const __m256i exp_bits = _mm256_srli_epi64(ix, 52);
  const __m256d exp_dbl = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(exp_bits, magic_i)), magic_d);
  __m256d k = _mm256_sub_pd(exp_dbl, bias);

  // m in [1, 2), then renormalized into [sqrt(2)/2, sqrt(2)).
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(ix, mant_mask), one_exp));
  const __m256d ge = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, half), ge);
  k = _mm256_add_pd(k, _mm256_and_pd(ge, one));

  const __m256d f = _mm256_sub_pd(m, one);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(two, f));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  const __m256d t1 = _mm256_mul_pd(
      w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg6, lg4), lg2));
  const __m256d t2 = _mm256_mul_pd(
      z, _mm256_fmadd_pd(
             w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg7, lg5), lg3), lg1));
  const __m256d r = _mm256_add_pd(t1, t2);
  const __m256d hfsq = _mm256_mul_pd(half, _mm256_mul_pd(f, f));

  // k*ln2_hi - ((hfsq - (s*(hfsq+R) + k*ln2_lo)) - f)
  const __m256d corr =
      _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r), _mm256_mul_pd(k, ln2_lo));
  const __m256d inner = _mm256_sub_pd(_mm256_sub_pd(hfsq, corr), f);
  return _mm256_fmsub_pd(k, ln2_hi, inner);
}

inline __m256d sample_block(__m256d c, __m256d sigma, __m256d u, __m256d v) {
  const __m256d eps = _mm256_set1_pd(kEps);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d neg_two = _mm256_set1_pd(-2.0);
  const __m256d q = _mm256_max_pd(u, eps);
  const __m256d t = _mm256_sqrt_pd(_mm256_mul_pd(neg_two, vlog_pd(q)));
  const __m256d mixw = _mm256_fnmadd_pd(two, v, one);  // 1 - 2v
  return _mm256_fmadd_pd(_mm256_mul_pd(sigma, t), mixw, c);
}

void sample_costs_avx2(std::size_t n, const double* c, const double* sigma,
                       const double* u01, const double* v01, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        sample_block(_mm256_loadu_pd(c + i), _mm256_loadu_pd(sigma + i),
                     _mm256_loadu_pd(u01 + i), _mm256_loadu_pd(v01 + i));
    _mm256_storeu_pd(out + i, r);
  }
  if (i < n) {
    // Pad the tail so every element goes through the same vector math.
    alignas(32) double cb[4] = {0, 0, 0, 0};
    alignas(32) double sb[4] = {0, 0, 0, 0};
    alignas(32) double ub[4] = {0.5, 0.5, 0.5, 0.5};
    alignas(32) double vb[4] = {0.5, 0.5, 0.5, 0.5};
    alignas(32) double ob[4];
    for (std::size_t j = 0; i + j < n; ++j) {
      cb[j] = c[i + j];
      sb[j] = sigma[i + j];
      ub[j] = u01[i + j];
      vb[j] = v01[i + j];
    }
    const __m256d r = sample_block(_mm256_load_pd(cb), _mm256_load_pd(sb),
                                   _mm256_load_pd(ub), _mm256_load_pd(vb));
    _mm256_store_pd(ob, r);
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] = ob[j];
    }
  }
}

inline __m256d weights_block(__m256d c, __m256d sigma, __m256d h,
                             __m256d kappa) {
  const __m256d inv_ln10 = _mm256_set1_pd(kInvLn10);
  const __m256d log10_h = _mm256_mul_pd(vlog_pd(h), inv_ln10);
  return _mm256_fnmadd_pd(_mm256_mul_pd(kappa, sigma), log10_h, c);
}

void ranked_weights_avx2(std::size_t n, const double* c, const double* sigma,
                         const double* h, double kappa, double* out) {
  const __m256d vk = _mm256_set1_pd(kappa);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        weights_block(_mm256_loadu_pd(c + i), _mm256_loadu_pd(sigma + i),
                      _mm256_loadu_pd(h + i), vk);
    _mm256_storeu_pd(out + i, r);
  }
  if (i < n) {
    alignas(32) double cb[4] = {0, 0, 0, 0};
    alignas(32) double sb[4] = {0, 0, 0, 0};
    alignas(32) double hb[4] = {0.5, 0.5, 0.5, 0.5};
    alignas(32) double ob[4];
    for (std::size_t j = 0; i + j < n; ++j) {
      cb[j] = c[i + j];
      sb[j] = sigma[i + j];
      hb[j] = h[i + j];
    }
    const __m256d r = weights_block(_mm256_load_pd(cb), _mm256_load_pd(sb),
                                    _mm256_load_pd(hb), vk);
    _mm256_store_pd(ob, r);
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] = ob[j];
    }
  }
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend backend{"avx2", &sample_costs_avx2,
                               &ranked_weights_avx2};
  return backend;
}

}  // namespace detail
}  // namespace ggfnsp::kernels
