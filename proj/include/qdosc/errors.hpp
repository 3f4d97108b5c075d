#pragma once

#include <stdexcept>
#include <string>

namespace qdosc {

/// A bracket function was asked to evaluate a deformation regime it does not
/// implement (e.g. sin/sinh brackets called with a Q-base parameter set).
class WrongBracketError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A matcher quantity was requested at a point (N, tau) outside the
/// feasibility window, where the defining square roots are not real.
class InfeasiblePointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The grid eigensolver detected non-negligible wavefunction amplitude at the
/// box boundary; carries a suggested larger half-width.
class DomainTooSmallError : public std::runtime_error {
public:
    DomainTooSmallError(const std::string& what, double suggested_half_width)
        : std::runtime_error(what), suggested_half_width_(suggested_half_width) {}

    double suggested_half_width() const noexcept { return suggested_half_width_; }

private:
    double suggested_half_width_;
};

/// A computed result violated an internal contract (complex eigenvalues from
/// a recurrence that must be real, a failed coefficient identity, ...).
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qdosc
