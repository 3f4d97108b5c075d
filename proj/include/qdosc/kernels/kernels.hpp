#pragma once

#include <span>
#include <string_view>

// Data-parallel inner loops used by the grid eigensolver, with a scalar
// reference implementation and SIMD variants selected at runtime.  The SIMD
// paths perform the same IEEE operations per element in the same order as the
// scalar path (no FMA contraction), so all backends produce bitwise-identical
// results; the equivalence tests assert exactly that.

namespace qdosc::kernels {

enum class Backend {
    Scalar,
    Avx2,
    Neon,
};

std::string_view backend_name(Backend b) noexcept;

/// Backend currently used by the kernel entry points.
Backend active_backend() noexcept;

/// True if the backend was compiled in and the CPU supports it.
bool backend_supported(Backend b) noexcept;

/// Pin the active backend (tests use this to compare variants).
/// Throws std::invalid_argument if the backend is unsupported here.
void force_backend(Backend b);

/// Return to the auto-detected backend.
void reset_backend() noexcept;

/// out[i] = v_min + coeffs[0] x^2 + coeffs[1] x^4 + ... evaluated by Horner
/// in x^2; coeffs holds the even-power coefficients in ascending order.
void eval_even_poly(std::span<const double> x, double v_min,
                    std::span<const double> coeffs, std::span<double> out);

/// counts[j] = number of eigenvalues of the symmetric tridiagonal matrix
/// (diag, offdiag) strictly below shifts[j], from the Sturm sequence
/// negative-pivot count.  offdiag_sq holds the squared off-diagonal entries;
/// pivots with |q| <= pivmin are clamped to -pivmin (LAPACK convention).
void sturm_counts(std::span<const double> diag, std::span<const double> offdiag_sq,
                  std::span<const double> shifts, double pivmin,
                  std::span<int> counts);

} // namespace qdosc::kernels
