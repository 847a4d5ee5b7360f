#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/hermitian_eig.hpp"

namespace qcorr {

std::array<double, 4> bell_eigenvalues(const BellDiagonalState& s) {
    return {
        0.25 * (1.0 + s.c1 + s.c2 - s.c3), // lambda_1+
        0.25 * (1.0 - s.c1 - s.c2 - s.c3), // lambda_1-
        0.25 * (1.0 + s.c1 - s.c2 + s.c3), // lambda_2+
        0.25 * (1.0 - s.c1 + s.c2 + s.c3), // lambda_2-
    };
}

bool is_physical(const BellDiagonalState& s) {
    const auto lam = bell_eigenvalues(s);
    return *std::min_element(lam.begin(), lam.end()) >= -eps_physical;
}

void require_physical(const BellDiagonalState& s) {
    if (!is_physical(s)) throw NonPhysicalState("coefficient triple has a negative Bell eigenvalue");
}

bool is_entangled(const BellDiagonalState& s) {
    require_physical(s);
    const auto lam = bell_eigenvalues(s);
    return *std::max_element(lam.begin(), lam.end()) > 0.5;
}

DensityMatrix to_density_matrix(const BellDiagonalState& s) {
    Mat4 m;
    const double d_outer = 0.25 * (1.0 + s.c3);
    const double d_inner = 0.25 * (1.0 - s.c3);
    const double x_outer = 0.25 * (s.c1 - s.c2);
    const double x_inner = 0.25 * (s.c1 + s.c2);
    m(0, 0) = d_outer;
    m(3, 3) = d_outer;
    m(1, 1) = d_inner;
    m(2, 2) = d_inner;
    m(0, 3) = x_outer;
    m(3, 0) = x_outer;
    m(1, 2) = x_inner;
    m(2, 1) = x_inner;
    return DensityMatrix{m};
}

BellDiagonalState from_density_matrix(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();

    auto off_pattern = [&](int r, int c) {
        const bool on_x = (r == c) || (r == 0 && c == 3) || (r == 3 && c == 0) ||
                          (r == 1 && c == 2) || (r == 2 && c == 1);
        return !on_x;
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (off_pattern(r, c) && std::abs(m(r, c)) > eps_pattern)
                throw NotBellDiagonal("entry outside the X pattern");

    for (int i = 0; i < 4; ++i)
        if (std::abs(m(i, i).imag()) > eps_pattern)
            throw NotBellDiagonal("complex diagonal entry");
    if (std::abs(m(0, 3).imag()) > eps_pattern || std::abs(m(3, 0).imag()) > eps_pattern ||
        std::abs(m(1, 2).imag()) > eps_pattern || std::abs(m(2, 1).imag()) > eps_pattern)
        throw NotBellDiagonal("complex off-diagonal entry");

    if (std::abs(m(0, 0) - m(3, 3)) > eps_pattern || std::abs(m(1, 1) - m(2, 2)) > eps_pattern)
        throw NotBellDiagonal("unequal diagonal pairs");
    if (std::abs(m(0, 3) - m(3, 0)) > eps_pattern || std::abs(m(1, 2) - m(2, 1)) > eps_pattern)
        throw NotBellDiagonal("asymmetric off-diagonal pair");
    if (std::abs(trace(m) - cplx{1.0}) > eps_pattern) throw NotBellDiagonal("trace not 1");

    BellDiagonalState s;
    s.c1 = (m(0, 3) + m(3, 0) + m(1, 2) + m(2, 1)).real();
    s.c2 = (m(1, 2) + m(2, 1) - m(0, 3) - m(3, 0)).real();
    s.c3 = (m(0, 0) + m(3, 3) - m(1, 1) - m(2, 2)).real();
    return s;
}

std::pair<Mat2, Mat2> marginals(const DensityMatrix& rho) {
    const Mat4& m = rho.matrix();
    Mat2 a, b;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
            b(i, j) = m(0 + i, 0 + j) + m(2 + i, 2 + j);
        }
    return {a, b};
}

Mat2 qubit_state(const BlochVector& a) {
    // Pauli matrices in the descending basis {|1>, |0>}: sigma_z = diag(-1, 1).
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 - a.z);
    m(1, 1) = 0.5 * (1.0 + a.z);
    m(0, 1) = 0.5 * cplx{a.x, a.y};
    m(1, 0) = 0.5 * cplx{a.x, -a.y};
    return m;
}

DensityMatrix product_state(const BlochVector& a, const BlochVector& b) {
    return DensityMatrix{kron(qubit_state(a), qubit_state(b))};
}

DensityMatrix swap_qubits(const DensityMatrix& rho) {
    Mat4 out;
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int ja = 0; ja < 2; ++ja)
                for (int jb = 0; jb < 2; ++jb)
                    out(2 * ib + ia, 2 * jb + ja) = rho(2 * ia + ib, 2 * ja + jb);
    return DensityMatrix{out};
}

bool is_valid_density_matrix(const DensityMatrix& rho, double tol) {
    const Mat4& m = rho.matrix();
    if (!is_hermitian(m, tol)) return false;
    if (std::abs(trace(m) - cplx{1.0}) > tol) return false;
    const auto lam = hermitian_eigenvalues(m);
    return lam.front() >= -tol;
}

BellDiagonalState random_physical_state(std::mt19937_64& rng) {
    // Three sorted uniforms cut [0,1] into four simplex coordinates.
    std::array<double, 3> u{uniform_double(rng), uniform_double(rng), uniform_double(rng)};
    std::sort(u.begin(), u.end());
    const double l1p = u[0];
    const double l1m = u[1] - u[0];
    const double l2p = u[2] - u[1];
    const double l2m = 1.0 - u[2];

    BellDiagonalState s;
    s.c1 = (l1p - l1m) + (l2p - l2m);
    s.c2 = (l1p - l1m) - (l2p - l2m);
    s.c3 = (l2p + l2m) - (l1p + l1m);
    return s;
}

} // namespace qcorr
