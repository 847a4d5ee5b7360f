#include "qcorr/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

double offdiag_norm_sq(const Mat4& m) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) s += std::norm(m(p, q));
    return s;
}

// One cyclic sweep of complex Jacobi rotations. For each pair (p, q) the 2x2
// Hermitian block [[app, apq], [conj(apq), aqq]] is diagonalized exactly by a
// unitary G whose first column is the eigenvector (lam - aqq, conj(apq))/N,
// picking the eigenvalue lam farther from aqq so N stays well away from zero.
void jacobi_sweep(Mat4& m, Mat4* vectors) {
    constexpr double negligible = 1e-300;
    for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
            const cplx apq = m(p, q);
            if (std::norm(apq) < negligible) continue;

            const double app = m(p, p).real();
            const double aqq = m(q, q).real();
            const double mean = 0.5 * (app + aqq);
            const double half_gap = 0.5 * (app - aqq);
            const double root = std::hypot(half_gap, std::abs(apq));
            const double lam = mean + (half_gap >= 0.0 ? root : -root);

            const double u = lam - aqq; // real by construction
            const double n = std::hypot(u, std::abs(apq));
            const double c = u / n;         // real rotation cosine
            const cplx s = std::conj(apq) / n;

            // Columns p, q of G: (c, s) and (-conj(s), c). Apply M <- G^H M G.
            for (int r = 0; r < 4; ++r) {
                const cplx mrp = m(r, p);
                const cplx mrq = m(r, q);
                m(r, p) = mrp * c + mrq * s;
                m(r, q) = -mrp * std::conj(s) + mrq * c;
            }
            for (int col = 0; col < 4; ++col) {
                const cplx mpc = m(p, col);
                const cplx mqc = m(q, col);
                m(p, col) = c * mpc + std::conj(s) * mqc;
                m(q, col) = -s * mpc + c * mqc;
            }
            // Pin the exactly-known entries against rounding drift.
            m(p, q) = 0.0;
            m(q, p) = 0.0;
            m(p, p) = cplx{m(p, p).real(), 0.0};
            m(q, q) = cplx{m(q, q).real(), 0.0};

            if (vectors) {
                for (int r = 0; r < 4; ++r) {
                    const cplx vrp = (*vectors)(r, p);
                    const cplx vrq = (*vectors)(r, q);
                    (*vectors)(r, p) = vrp * c + vrq * s;
                    (*vectors)(r, q) = -vrp * std::conj(s) + vrq * c;
                }
            }
        }
    }
}

void diagonalize(Mat4& m, Mat4* vectors) {
    constexpr double target = 1e-13;
    constexpr int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (std::sqrt(offdiag_norm_sq(m)) < target) return;
        jacobi_sweep(m, vectors);
    }
    if (std::sqrt(offdiag_norm_sq(m)) >= target)
        throw NotConverged("jacobi diagonalization did not reach off-diagonal norm 1e-13");
}

} // namespace

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) {
    Mat4 work = m;
    diagonalize(work, nullptr);
    std::array<double, 4> vals{work(0, 0).real(), work(1, 1).real(), work(2, 2).real(),
                               work(3, 3).real()};
    std::sort(vals.begin(), vals.end());
    return vals;
}

EigenSystem4 hermitian_eigensystem(const Mat4& m) {
    Mat4 work = m;
    Mat4 vectors = Mat4::identity();
    diagonalize(work, &vectors);

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return work(a, a).real() < work(b, b).real(); });

    EigenSystem4 out;
    out.vectors = Mat4::zero();
    for (int k = 0; k < 4; ++k) {
        out.values[static_cast<std::size_t>(k)] = work(order[static_cast<std::size_t>(k)],
                                                       order[static_cast<std::size_t>(k)])
                                                      .real();
        for (int r = 0; r < 4; ++r) out.vectors(r, k) = vectors(r, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double root = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - root, mean + root};
}

} // namespace qcorr
