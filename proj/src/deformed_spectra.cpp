#include "qdosc/deformed_spectra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdosc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

DeformationParam DeformationParam::q_phase(double tau, double omega) {
    require(tau > 0.0, "q-phase regime requires tau > 0");
    require(tau < std::numbers::pi, "q-phase regime requires tau < pi");
    require(omega > 0.0, "omega must be positive");
    return {Regime::QPhase, tau, 0.0, omega};
}

DeformationParam DeformationParam::q_real(double tau, double omega) {
    require(tau > 0.0, "q-real regime requires tau > 0");
    require(omega > 0.0, "omega must be positive");
    return {Regime::QReal, tau, 0.0, omega};
}

DeformationParam DeformationParam::q_base(double Q, double omega) {
    require(Q > 0.0, "Q must be positive");
    require(Q != 1.0, "Q = 1 is the undeformed point; use Q near 1 instead");
    require(omega > 0.0, "omega must be positive");
    return {Regime::QBase, 0.0, Q, omega};
}

Suq11Params::Suq11Params(double A_, double tau_, int N_, double E0prime_)
    : A(A_), tau(tau_), N(N_), E0prime(E0prime_) {
    require(A > 0.0, "A must be positive for an increasing spectrum");
    require(tau > 0.0, "tau must be positive");
    require(N >= 1, "N must be a positive integer");
}

double q_bracket_phase(double x, double tau) {
    if (std::fabs(tau) < kUndeformedThreshold) return x;
    return std::sin(tau * x) / std::sin(tau);
}

double q_bracket_real(double x, double tau) {
    if (std::fabs(tau) < kUndeformedThreshold) return x;
    return std::sinh(tau * x) / std::sinh(tau);
}

double big_q_number(double x, double Q) {
    if (!(Q > 0.0)) throw std::invalid_argument("Q must be positive");
    const double dq = Q - 1.0;
    if (std::fabs(dq) < kUndeformedThreshold) return x; // limit value
    // (Q^x - 1)/(Q - 1); expm1/log1p keeps precision for Q near 1
    return std::expm1(x * std::log1p(dq)) / dq;
}

double q_number(double x, const DeformationParam& d) {
    switch (d.regime) {
    case Regime::QPhase: return q_bracket_phase(x, d.tau);
    case Regime::QReal: return q_bracket_real(x, d.tau);
    case Regime::QBase:
        throw WrongBracketError("q_number called with a Q-base parameter; use big_q_number");
    }
    throw std::logic_error("unreachable");
}

double spectrum_q_phase(int n, const DeformationParam& d, bool monotone_guard) {
    require(n >= 0, "level index must be non-negative");
    if (d.regime != Regime::QPhase)
        throw WrongBracketError("spectrum_q_phase requires a q-phase parameter");
    if (monotone_guard && d.tau * (n + 1) > std::numbers::pi / 2)
        throw std::domain_error("level outside the first monotone branch (tau (n+1) > pi/2)");
    if (d.tau < kUndeformedThreshold) return d.omega * (n + 0.5);
    return 0.5 * d.omega * std::sin(d.tau * (n + 0.5)) / std::sin(0.5 * d.tau);
}

double spectrum_q_real(int n, const DeformationParam& d) {
    require(n >= 0, "level index must be non-negative");
    if (d.regime != Regime::QReal)
        throw WrongBracketError("spectrum_q_real requires a q-real parameter");
    if (d.tau < kUndeformedThreshold) return d.omega * (n + 0.5);
    return 0.5 * d.omega * std::sinh(d.tau * (n + 0.5)) / std::sinh(0.5 * d.tau);
}

double spectrum_q_base(int n, const DeformationParam& d) {
    require(n >= 0, "level index must be non-negative");
    if (d.regime != Regime::QBase)
        throw WrongBracketError("spectrum_q_base requires a Q-base parameter");
    return 0.5 * d.omega * (big_q_number(n, d.Q) + big_q_number(n + 1, d.Q));
}

double spectrum_suq11(int n, const Suq11Params& p) {
    require(n >= 0, "level index must be non-negative");
    if (p.tau < kUndeformedThreshold) return spectrum_pt_limit(n, p.A, p.N, p.E0prime);
    const double st = std::sin(p.tau);
    const double half = 0.5 * p.N;
    return p.E0prime -
           p.A * std::sin(p.tau * (n - half)) * std::sin(p.tau * (n + 1 - half)) / (st * st);
}

double spectrum_pt_limit(int n, double A, int N, double E0prime) {
    require(n >= 0, "level index must be non-negative");
    const double half = 0.5 * N;
    return E0prime - A * (n - half) * (n + 1 - half);
}

} // namespace qdosc
