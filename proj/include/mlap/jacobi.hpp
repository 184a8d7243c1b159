#pragma once

#include "mlap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mlap {

/// Sorted eigenvalues (ascending, with multiplicity).
using eigen_list = std::vector<double>;

/// Cyclic Jacobi rotations for symmetric matrices. Sweeps the strict upper
/// triangle in a fixed row-major order, annihilating each (p,q) entry with a
/// Givens rotation, until the off-diagonal Frobenius norm falls below
/// 1e-12 times the matrix norm. Deterministic: no pivot searching, so runs
/// are bit-reproducible across thread counts.
inline eigen_list jacobi_eigenvalues(matrix<double> a, double rel_tol = 1e-12,
                                     int max_sweeps = 64) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("jacobi: matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw std::invalid_argument("jacobi: matrix must be symmetric");

    double norm = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    const double tol = rel_tol * std::max(norm, 1e-300);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2 * a(i, j) * a(i, j);
        if (std::sqrt(off) <= tol) break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                // smaller-angle root of t^2 + 2 t theta - 1 = 0, stable form
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip - s * (aiq + tau * aip);
                    a(p, i) = a(i, p);
                    a(i, q) = aiq + s * (aip - tau * aiq);
                    a(q, i) = a(i, q);
                }
            }
    }

    eigen_list eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Numeric spectrum of an exact symmetric matrix (cross-check companion to
/// the exact characteristic polynomial).
inline eigen_list eig_symmetric(const matrix<Rational>& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("eig_symmetric: matrix must be symmetric");
    return jacobi_eigenvalues(to_double(m));
}

inline eigen_list eig_symmetric(const matrix<Integer>& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("eig_symmetric: matrix must be symmetric");
    return jacobi_eigenvalues(to_double(m));
}

}  // namespace mlap
