#include "qdosc/kernels/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdosc::kernels {

namespace detail {

void eval_even_poly_scalar(std::span<const double> x, double v_min,
                           std::span<const double> coeffs, std::span<double> out) {
    const std::size_t nc = coeffs.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] * x[i];
        double acc = 0.0;
        for (std::size_t j = nc; j-- > 0;) {
            acc = acc * t + coeffs[j];
        }
        out[i] = v_min + acc * t;
    }
}

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> offdiag_sq,
                         std::span<const double> shifts, double pivmin,
                         std::span<int> counts) {
    const std::size_t m = diag.size();
    for (std::size_t j = 0; j < shifts.size(); ++j) {
        const double x = shifts[j];
        double q = diag[0] - x;
        if (std::fabs(q) <= pivmin) q = -pivmin;
        int count = q <= 0.0 ? 1 : 0;
        for (std::size_t i = 1; i < m; ++i) {
            q = diag[i] - offdiag_sq[i - 1] / q - x;
            if (std::fabs(q) <= pivmin) q = -pivmin;
            if (q <= 0.0) ++count;
        }
        counts[j] = count;
    }
}

#if defined(QDOSC_HAVE_AVX2)
void eval_even_poly_avx2(std::span<const double> x, double v_min,
                         std::span<const double> coeffs, std::span<double> out);
void sturm_counts_avx2(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, double pivmin,
                       std::span<int> counts);
bool cpu_has_avx2() noexcept;
#endif
#if defined(QDOSC_HAVE_NEON)
void eval_even_poly_neon(std::span<const double> x, double v_min,
                         std::span<const double> coeffs, std::span<double> out);
void sturm_counts_neon(std::span<const double> diag, std::span<const double> offdiag_sq,
                       std::span<const double> shifts, double pivmin,
                       std::span<int> counts);
#endif

} // namespace detail

namespace {

Backend detect_backend() noexcept {
#if defined(QDOSC_HAVE_AVX2)
    if (detail::cpu_has_avx2()) return Backend::Avx2;
#endif
#if defined(QDOSC_HAVE_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

Backend g_backend = detect_backend();

} // namespace

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "unknown";
}

Backend active_backend() noexcept { return g_backend; }

bool backend_supported(Backend b) noexcept {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(QDOSC_HAVE_AVX2)
        return detail::cpu_has_avx2();
#else
        return false;
#endif
    case Backend::Neon:
#if defined(QDOSC_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

void force_backend(Backend b) {
    if (!backend_supported(b)) {
        throw std::invalid_argument("kernel backend not supported on this host: " +
                                    std::string(backend_name(b)));
    }
    g_backend = b;
}

void reset_backend() noexcept { g_backend = detect_backend(); }

void eval_even_poly(std::span<const double> x, double v_min,
                    std::span<const double> coeffs, std::span<double> out) {
    assert(out.size() == x.size());
    switch (g_backend) {
#if defined(QDOSC_HAVE_AVX2)
    case Backend::Avx2:
        detail::eval_even_poly_avx2(x, v_min, coeffs, out);
        return;
#endif
#if defined(QDOSC_HAVE_NEON)
    case Backend::Neon:
        detail::eval_even_poly_neon(x, v_min, coeffs, out);
        return;
#endif
    default:
        detail::eval_even_poly_scalar(x, v_min, coeffs, out);
        return;
    }
}

void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq,
                  std::span<const double> shifts, double pivmin,
                  std::span<int> counts) {
    assert(diag.size() >= 1);
    assert(offdiag_sq.size() + 1 == diag.size());
    assert(counts.size() == shifts.size());
    switch (g_backend) {
#if defined(QDOSC_HAVE_AVX2)
    case Backend::Avx2:
        detail::sturm_counts_avx2(diag, offdiag_sq, shifts, pivmin, counts);
        return;
#endif
#if defined(QDOSC_HAVE_NEON)
    case Backend::Neon:
        detail::sturm_counts_neon(diag, offdiag_sq, shifts, pivmin, counts);
        return;
#endif
    default:
        detail::sturm_counts_scalar(diag, offdiag_sq, shifts, pivmin, counts);
        return;
    }
}

} // namespace qdosc::kernels
