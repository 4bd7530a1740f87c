// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "darboux_dirac/kernels.hpp"
#include "kernels_common.hpp"

namespace darboux_dirac::kernels::avx2 {

namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d sign_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  return _mm256_and_pd(v, sign_mask);
}

}  // namespace

void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d tol = _mm256_set1_pd(ctl.rel_tol);
  const std::size_t n = x.size();

  for (std::size_t base = 0; base < n; base += 4) {
    const std::size_t lanes = std::min<std::size_t>(4, n - base);
    // Padding lanes sit at x = 0, where the series stops after one term.
    alignas(32) double buf[4] = {0.0, 0.0, 0.0, 0.0};
    std::copy_n(x.data() + base, lanes, buf);
    const __m256d xv = _mm256_load_pd(buf);

    __m256d term = one;
    __m256d sum = one;
    __m256d active = _mm256_cmp_pd(one, one, _CMP_EQ_OQ);
    bool done = false;
    for (int k = 0; k < ctl.max_terms; ++k) {
      const __m256d ratio = _mm256_mul_pd(_mm256_set1_pd(detail::series_coef(a, b, k)), xv);
      const __m256d new_term = _mm256_mul_pd(term, ratio);
      const __m256d new_sum = _mm256_add_pd(sum, new_term);
      term = _mm256_blendv_pd(term, new_term, active);
      sum = _mm256_blendv_pd(sum, new_sum, active);

      __m256d converged = _mm256_cmp_pd(term, zero, _CMP_EQ_OQ);
      if (detail::past_growth(a, k)) {
        const __m256d next =
            _mm256_mul_pd(_mm256_set1_pd(detail::series_coef(a, b, k + 1)), xv);
        const __m256d shrinking = _mm256_cmp_pd(abs_pd(next), one, _CMP_LT_OQ);
        const __m256d small =
            _mm256_cmp_pd(abs_pd(term), _mm256_mul_pd(tol, abs_pd(sum)), _CMP_LE_OQ);
        converged = _mm256_or_pd(converged, _mm256_and_pd(shrinking, small));
      }
      active = _mm256_andnot_pd(converged, active);
      if (_mm256_movemask_pd(active) == 0) {
        done = true;
        break;
      }
    }
    if (!done) {
      alignas(32) double act[4];
      _mm256_store_pd(act, active);
      for (std::size_t l = 0; l < lanes; ++l) {
        if (std::signbit(act[l]) || std::isnan(act[l])) {
          throw detail::no_convergence(a, b, buf[l], ctl.max_terms);
        }
      }
    }
    alignas(32) double res[4];
    _mm256_store_pd(res, sum);
    std::copy_n(res, lanes, out.data() + base);
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i),
                                           _mm256_loadu_pd(b.data() + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  __m256d m = _mm256_setzero_pd();
  __m256d nan_seen = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(a.data() + i);
    nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(v, v, _CMP_UNORD_Q));
    m = _mm256_max_pd(m, abs_pd(v));
  }
  if (_mm256_movemask_pd(nan_seen) != 0) return std::numeric_limits<double>::quiet_NaN();
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    if (std::isnan(a[i])) return std::numeric_limits<double>::quiet_NaN();
    r = std::max(r, std::abs(a[i]));
  }
  return r;
}

}  // namespace darboux_dirac::kernels::avx2
