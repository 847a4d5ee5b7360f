#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// A state (coefficient triple or density matrix) violates positivity,
/// Hermiticity or unit trace beyond the physical tolerance.
struct NonPhysicalState : std::domain_error {
    using std::domain_error::domain_error;
};

/// A 4x4 matrix does not have the Bell-diagonal X pattern.
struct NotBellDiagonal : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iterative minimization failed its convergence criterion.
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The product-state minimizer found a value below the analytic interior
/// minimum |c|^2/4, which would contradict the closest-product-state result.
struct GlobalMinimumViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcorr
