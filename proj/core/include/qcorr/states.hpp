#pragma once

#include <array>
#include <cmath>
#include <random>
#include <utility>

#include "qcorr/matrix.hpp"

namespace qcorr {

/// Absolute tolerance on eigenvalue nonnegativity and other exact state
/// identities; closed-form arithmetic introduces only rounding error.
inline constexpr double eps_physical = 1e-12;

/// Tolerance for recognising the Bell-diagonal X pattern in a matrix that may
/// have been reconstructed through an eigensolver.
inline constexpr double eps_pattern = 1e-10;

/// Bell-diagonal two-qubit state: the three real correlation coefficients of
/// the sigma_j (x) sigma_j terms. Plain value; `is_physical` is the predicate.
struct BellDiagonalState {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Real three-vector with norm <= 1, used for qubit Bloch vectors and
/// measurement axes.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
};

/// Two-qubit density matrix in the computational basis ordered
/// {|11>, |10>, |01>, |00>} (first label = qubit A). Construction does not
/// validate; `is_valid_density_matrix` checks Hermiticity, unit trace and
/// positivity when needed.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(const Mat4& m) : m_(m) {}

    const Mat4& matrix() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

    static DensityMatrix maximally_mixed() { return DensityMatrix{0.25 * Mat4::identity()}; }

    /// Projector |i><i| onto one computational basis vector; index 3 is |00>.
    static DensityMatrix basis_state(int index) {
        Mat4 m;
        m(index, index) = 1.0;
        return DensityMatrix{m};
    }

  private:
    Mat4 m_;
};

/// The four Bell-basis eigenvalues of a coefficient triple, in the order
/// {lambda_1+, lambda_1-, lambda_2+, lambda_2-} where |1+-> are the
/// one-excitation and |2+-> the two-excitation Bell states. Accepts any
/// triple; the values sum to 1 but may be negative for non-physical input.
std::array<double, 4> bell_eigenvalues(const BellDiagonalState& s);

bool is_physical(const BellDiagonalState& s);

/// Throws NonPhysicalState unless is_physical(s).
void require_physical(const BellDiagonalState& s);

/// True iff the largest Bell eigenvalue strictly exceeds 1/2. A largest
/// eigenvalue of exactly 1/2 counts as separable.
/// Throws NonPhysicalState on non-physical input.
bool is_entangled(const BellDiagonalState& s);

DensityMatrix to_density_matrix(const BellDiagonalState& s);

/// Inverse of to_density_matrix. Throws NotBellDiagonal unless rho has the
/// unit-trace X pattern with rho11 = rho44, rho22 = rho33 and real
/// off-diagonals, all within eps_pattern.
BellDiagonalState from_density_matrix(const DensityMatrix& rho);

/// Partial traces (Tr_B rho, Tr_A rho); both Hermitian with unit trace.
std::pair<Mat2, Mat2> marginals(const DensityMatrix& rho);

/// Single-qubit state (I + a.sigma)/2 in the basis {|1>, |0>}. Expects
/// |a| <= 1; no validation.
Mat2 qubit_state(const BlochVector& a);

/// Product state rho(a) (x) rho(b).
DensityMatrix product_state(const BlochVector& a, const BlochVector& b);

/// Exchange of subsystems A and B.
DensityMatrix swap_qubits(const DensityMatrix& rho);

/// Hermitian within tol, unit trace within tol, all eigenvalues >= -tol.
bool is_valid_density_matrix(const DensityMatrix& rho, double tol = eps_physical);

/// Uniform double in [0, 1) from raw engine output; bit-exact across
/// platforms, unlike std::uniform_real_distribution.
inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Physical-by-construction random state: four eigenvalues sampled from the
/// flat simplex, mapped back to the coefficient triple.
BellDiagonalState random_physical_state(std::mt19937_64& rng);

} // namespace qcorr
