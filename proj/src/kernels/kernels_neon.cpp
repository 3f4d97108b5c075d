// NEON (aarch64) variants of the kernel inner loops, two lanes per pass.
// Compiled with -ffp-contract=off; per-lane operation order matches the
// scalar reference exactly.

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cstddef>
#include <span>

namespace qdosc::kernels::detail {

void eval_even_poly_scalar(std::span<const double> x, double v_min,
                           std::span<const double> coeffs, std::span<double> out);
void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::span<const double> shifts, double pivmin,
                         std::span<int> counts);

void eval_even_poly_neon(std::span<const double> x, double v_min,
                         std::span<const double> coeffs, std::span<double> out) {
    const std::size_t nc = coeffs.size();
    const std::size_t n2 = x.size() / 2 * 2;
    const float64x2_t vmin = vdupq_n_f64(v_min);
    for (std::size_t i = 0; i < n2; i += 2) {
        const float64x2_t xv = vld1q_f64(&x[i]);
        const float64x2_t t = vmulq_f64(xv, xv);
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t j = nc; j-- > 0;) {
            acc = vaddq_f64(vmulq_f64(acc, t), vdupq_n_f64(coeffs[j]));
        }
        vst1q_f64(&out[i], vaddq_f64(vmin, vmulq_f64(acc, t)));
    }
    if (n2 < x.size()) {
        eval_even_poly_scalar(x.subspan(n2), v_min, coeffs, out.subspan(n2));
    }
}

void sturm_counts_neon(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, double pivmin,
                       std::span<int> counts) {
    const std::size_t m = diag.size();
    const std::size_t n2 = shifts.size() / 2 * 2;
    const float64x2_t vpivmin = vdupq_n_f64(pivmin);
    const float64x2_t vnegpiv = vdupq_n_f64(-pivmin);
    const float64x2_t vone = vdupq_n_f64(1.0);
    const float64x2_t vzero = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < n2; j += 2) {
        const float64x2_t x = vld1q_f64(&shifts[j]);
        float64x2_t q = vsubq_f64(vdupq_n_f64(diag[0]), x);
        uint64x2_t small = vcleq_f64(vabsq_f64(q), vpivmin);
        q = vbslq_f64(small, vnegpiv, q);
        float64x2_t cnt = vbslq_f64(vcleq_f64(q, vzero), vone, vzero);
        for (std::size_t i = 1; i < m; ++i) {
            q = vsubq_f64(vsubq_f64(vdupq_n_f64(diag[i]),
                                    vdivq_f64(vdupq_n_f64(offdiag_sq[i - 1]), q)),
                          x);
            small = vcleq_f64(vabsq_f64(q), vpivmin);
            q = vbslq_f64(small, vnegpiv, q);
            cnt = vaddq_f64(cnt, vbslq_f64(vcleq_f64(q, vzero), vone, vzero));
        }
        double tmp[2];
        vst1q_f64(tmp, cnt);
        counts[j] = static_cast<int>(tmp[0]);
        counts[j + 1] = static_cast<int>(tmp[1]);
    }
    if (n2 < shifts.size()) {
        sturm_counts_scalar(diag, offdiag_sq, shifts.subspan(n2), pivmin, counts.subspan(n2));
    }
}

} // namespace qdosc::kernels::detail

#endif // __aarch64__ && __ARM_NEON
