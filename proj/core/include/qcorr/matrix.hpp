#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcorr {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major value type.
struct Mat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    static Mat2 zero() { return {}; }
    static Mat2 identity() {
        Mat2 m;
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return m;
    }
};

/// Dense 4x4 complex matrix, row-major value type.
struct Mat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4 zero() { return {}; }
    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat2 operator*(double s, const Mat2& a) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline cplx trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

inline cplx trace(const Mat4& m) { return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3); }

inline Mat4 adjoint(const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

/// Kronecker product; index (2*iA + iB) matches the two-qubit basis ordering
/// used throughout (first factor = qubit A).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int ja = 0; ja < 2; ++ja)
                for (int jb = 0; jb < 2; ++jb)
                    r(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
    return r;
}

/// Tr(a*b) for Hermitian a, b (real up to rounding; the real part is returned).
inline double trace_product_hermitian(const Mat4& a, const Mat4& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += (a(i, j) * b(j, i)).real();
    return s;
}

/// Squared Frobenius norm of a - b.
inline double frobenius_distance_sq(const Mat4& a, const Mat4& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 16; ++i) s += std::norm(a.e[i] - b.e[i]);
    return s;
}

inline double max_hermiticity_defect(const Mat4& m) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

inline bool is_hermitian(const Mat4& m, double tol) { return max_hermiticity_defect(m) <= tol; }

} // namespace qcorr
