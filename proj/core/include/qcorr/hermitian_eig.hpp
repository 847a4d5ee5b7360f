#pragma once

#include <array>

#include "qcorr/matrix.hpp"

namespace qcorr {

/// Eigendecomposition of a 4x4 Hermitian matrix. Columns of `vectors` are the
/// eigenvectors, ordered to match `values` (ascending).
struct EigenSystem4 {
    std::array<double, 4> values;
    Mat4 vectors;
};

/// Eigenvalues of a 4x4 Hermitian matrix, ascending. Cyclic Jacobi sweeps with
/// complex Givens rotations, iterated until the off-diagonal Frobenius norm
/// drops below 1e-13.
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);

/// Eigenvalues and eigenvectors of a 4x4 Hermitian matrix.
EigenSystem4 hermitian_eigensystem(const Mat4& m);

/// Eigenvalues of a 2x2 Hermitian matrix (closed form), ascending.
std::array<double, 2> hermitian_eigenvalues(const Mat2& m);

} // namespace qcorr
