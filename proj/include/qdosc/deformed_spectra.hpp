#pragma once

#include "qdosc/errors.hpp"

// Closed-form energy spectra of the deformed oscillators (hbar = m = 1
// throughout): the q-deformed oscillator with q a phase or real exponential,
// the Q-deformed oscillator, the SU_q(1,1) anharmonic oscillator, and its
// tau -> 0 Poschl-Teller-type limit.

namespace qdosc {

enum class Regime {
    QPhase, // q = exp(i tau), brackets sin(tau x)/sin(tau)
    QReal,  // q = exp(tau),   brackets sinh(tau x)/sinh(tau)
    QBase,  // brackets (Q^x - 1)/(Q - 1)
};

/// Deformation regime plus parameter and energy scale omega.
/// tau > 0 in both q regimes (q <-> 1/q symmetry); QPhase also needs
/// tau < pi so sin(tau) != 0 on the arguments used.
struct DeformationParam {
    Regime regime;
    double tau = 0.0; // valid for QPhase / QReal
    double Q = 0.0;   // valid for QBase
    double omega = 1.0;

    static DeformationParam q_phase(double tau, double omega);
    static DeformationParam q_real(double tau, double omega);
    static DeformationParam q_base(double Q, double omega);
};

/// SU_q(1,1) anharmonic oscillator parameters.  A > 0 is required for an
/// increasing spectrum; N = 2 n_max or 2 n_max + 1 with n_max the last level
/// before dissociation.
struct Suq11Params {
    double A;
    double tau;
    int N;
    double E0prime;

    Suq11Params(double A, double tau, int N, double E0prime);
};

// deformation magnitudes below this switch to the analytic undeformed limit
inline constexpr double kUndeformedThreshold = 1e-12;

// bracket functions (free-standing; the typed q_number dispatches on regime)
double q_bracket_phase(double x, double tau);
double q_bracket_real(double x, double tau);
double big_q_number(double x, double Q); // Q = 1 handled as the limit x

/// [x] in the regime of d; throws WrongBracketError for QBase (use
/// big_q_number for Q-brackets).
double q_number(double x, const DeformationParam& d);

/// E_n = (omega/2) sin(tau(n+1/2)) / sin(tau/2).  With monotone_guard the
/// level must sit inside the first increasing branch, tau (n+1) <= pi/2.
double spectrum_q_phase(int n, const DeformationParam& d, bool monotone_guard = false);

/// E_n = (omega/2) sinh(tau(n+1/2)) / sinh(tau/2); strictly convex in n.
double spectrum_q_real(int n, const DeformationParam& d);

/// E_n = (omega/2) ([n]_Q + [n+1]_Q).
double spectrum_q_base(int n, const DeformationParam& d);

/// E_n = E0' - A sin(tau(n - N/2)) sin(tau(n + 1 - N/2)) / sin^2(tau).
double spectrum_suq11(int n, const Suq11Params& p);

/// tau -> 0 limit of the SU_q(1,1) spectrum:
/// E_n = E0' - A (n - N/2)(n + 1 - N/2).
double spectrum_pt_limit(int n, double A, int N, double E0prime);

} // namespace qdosc
