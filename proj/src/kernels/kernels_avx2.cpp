// AVX2 variants of the kernel inner loops.  This translation unit is compiled
// with -mavx2 -ffp-contract=off; each lane performs exactly the scalar
// operation sequence (mul/add/div, no FMA), so results are bitwise identical
// to the scalar reference.

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <span>

namespace qdosc::kernels::detail {

void eval_even_poly_scalar(std::span<const double> x, double v_min,
                           std::span<const double> coeffs, std::span<double> out);
void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::span<const double> shifts, double pivmin,
                         std::span<int> counts);

bool cpu_has_avx2() noexcept {
    return __builtin_cpu_supports("avx2") != 0;
}

void eval_even_poly_avx2(std::span<const double> x, double v_min,
                         std::span<const double> coeffs, std::span<double> out) {
    const std::size_t nc = coeffs.size();
    const std::size_t n4 = x.size() / 4 * 4;
    const __m256d vmin = _mm256_set1_pd(v_min);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d xv = _mm256_loadu_pd(&x[i]);
        const __m256d t = _mm256_mul_pd(xv, xv);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t j = nc; j-- > 0;) {
            acc = _mm256_add_pd(_mm256_mul_pd(acc, t), _mm256_set1_pd(coeffs[j]));
        }
        _mm256_storeu_pd(&out[i], _mm256_add_pd(vmin, _mm256_mul_pd(acc, t)));
    }
    if (n4 < x.size()) {
        eval_even_poly_scalar(x.subspan(n4), v_min, coeffs, out.subspan(n4));
    }
}

void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, double pivmin,
                       std::span<int> counts) {
    const std::size_t m = diag.size();
    const std::size_t n4 = shifts.size() / 4 * 4;
    const __m256d vpivmin = _mm256_set1_pd(pivmin);
    const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
    const __m256d vone = _mm256_set1_pd(1.0);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    for (std::size_t j = 0; j < n4; j += 4) {
        const __m256d x = _mm256_loadu_pd(&shifts[j]);
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
        __m256d small = _mm256_cmp_pd(_mm256_and_pd(q, absmask), vpivmin, _CMP_LE_OQ);
        q = _mm256_blendv_pd(q, vnegpiv, small);
        __m256d cnt = _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LE_OQ), vone);
        for (std::size_t i = 1; i < m; ++i) {
            q = _mm256_sub_pd(
                _mm256_sub_pd(_mm256_set1_pd(diag[i]),
                              _mm256_div_pd(_mm256_set1_pd(offdiag_sq[i - 1]), q)),
                x);
            small = _mm256_cmp_pd(_mm256_and_pd(q, absmask), vpivmin, _CMP_LE_OQ);
            q = _mm256_blendv_pd(q, vnegpiv, small);
            cnt = _mm256_add_pd(cnt, _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LE_OQ), vone));
        }
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, cnt);
        for (int l = 0; l < 4; ++l) counts[j + l] = static_cast<int>(tmp[l]);
    }
    if (n4 < shifts.size()) {
        sturm_counts_scalar(diag, offdiag_sq, shifts.subspan(n4), pivmin, counts.subspan(n4));
    }
}

} // namespace qdosc::kernels::detail
