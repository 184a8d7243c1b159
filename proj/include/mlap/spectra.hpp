#pragma once

#include "mlap/charpoly.hpp"
#include "mlap/errors.hpp"
#include "mlap/fd_coeffs.hpp"
#include "mlap/jacobi.hpp"
#include "mlap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mlap {

// ---- closed-form spectra ----------------------------------------------------

/// j-th (Fourier-indexed, unsorted) eigenvalue of L^(m) of the n-cycle:
/// 4 sum_k a_{k,m} sin^2(pi k j / n). Valid for n >= 2m+1; shorter cycles
/// break the jump-matrix/path-matrix correspondence at the antipode.
inline double cycle_m_eigenvalue(int n, int m, int j) {
    if (n < 2 * m + 1)
        throw capability_error("cycle closed form requires n >= 2m+1");
    double acc = 0;
    for (int k = 1; k <= m; ++k)
        acc += 4 * to_double(coeff(k, m)) *
               std::pow(std::sin(std::numbers::pi * k * j / n), 2);
    return acc;
}

inline eigen_list cycle_m_spectrum(int n, int m) {
    eigen_list e(n);
    for (int j = 0; j < n; ++j) e[j] = cycle_m_eigenvalue(n, m, j);
    std::sort(e.begin(), e.end());
    return e;
}

/// The single nonzero eigenvalue of L^(m) of K_n (multiplicity n-1), exact:
/// n * sum_k a_{k,m} (k-1)! C(n-2, k-1). For m = 2 this is n(18-n)/12.
inline Rational complete_m_value(int n, int m) {
    if (m < 1 || m >= n) throw std::invalid_argument("complete_m_value: need 1 <= m < n");
    Rational s = 0;
    for (int k = 1; k <= m; ++k)
        s += coeff(k, m) * Rational(factorial(k - 1) * binomial(n - 2, k - 1));
    return Rational(n) * s;
}

inline eigen_list complete_m_spectrum(int n, int m) {
    eigen_list e(n, to_double(complete_m_value(n, m)));
    e[0] = 0;
    std::sort(e.begin(), e.end());
    return e;
}

/// Star K_{1,n-1} under L^(m): {0} u {n a_1} u {a_1 + (n-1) a_2} with the
/// last value of multiplicity n-2 (paths in a star never exceed length 2,
/// so only the first two weights enter, for every order m).
struct star_values {
    Rational full;  // n * a_{1,m}, the eigenvalue of (1-n,1,...,1)-type vectors
    Rational leaf;  // a_{1,m} + (n-1) a_{2,m}, multiplicity n-2
};

inline star_values star_m_values(int n, int m) {
    if (n < 3) throw std::invalid_argument("star_m_values: need n >= 3");
    if (m < 1) throw std::invalid_argument("star_m_values: need m >= 1");
    const Rational a1 = coeff(1, m);
    const Rational a2 = (m >= 2) ? coeff(2, m) : Rational(0);
    return {Rational(n) * a1, a1 + Rational(n - 1) * a2};
}

inline eigen_list star_m_spectrum(int n, int m) {
    const auto v = star_m_values(n, m);
    eigen_list e;
    e.push_back(0);
    e.push_back(to_double(v.full));
    for (int i = 0; i < n - 2; ++i) e.push_back(to_double(v.leaf));
    std::sort(e.begin(), e.end());
    return e;
}

/// L^(2) spectrum of a k-regular graph from its adjacency spectrum:
/// gamma -> (gamma^2 - 16 gamma + 16k - k^2) / 12.
inline eigen_list regular_two_spectrum(const eigen_list& adj_eigs, int k) {
    eigen_list out;
    out.reserve(adj_eigs.size());
    for (double g : adj_eigs) out.push_back((g * g - 16 * g + 16 * k - double(k) * k) / 12);
    std::sort(out.begin(), out.end());
    return out;
}

/// L^(2) of Circ_n(s_1..s_k) in closed form. The ordinary adjacency
/// eigenvalue at Fourier index j is sum_i 2 cos(2 pi s_i j / n), except that
/// an antipodal jump s = n/2 contributes (-1)^j once (degree 2k-1 instead
/// of 2k); the order-2 eigenvalue is then
/// (lambda_j^2 - 16 lambda_j - k'^2 + 16 k') / 12 with k' the degree.
inline double circulant_two_eigenvalue(int n, const std::vector<int>& jumps, int j) {
    bool half = false;
    for (int s : jumps) {
        if (s < 1 || 2 * s > n) throw std::invalid_argument("circulant: jump out of range");
        if (2 * s == n) half = true;
    }
    double lam = 0;
    for (int s : jumps) {
        if (2 * s == n)
            lam += (j % 2 == 0) ? 1 : -1;
        else
            lam += 2 * std::cos(2 * std::numbers::pi * s * j / n);
    }
    const int degree = 2 * static_cast<int>(jumps.size()) - (half ? 1 : 0);
    return (lam * lam - 16 * lam - double(degree) * degree + 16 * degree) / 12;
}

inline eigen_list circulant_two_spectrum(int n, const std::vector<int>& jumps) {
    eigen_list e(n);
    for (int j = 0; j < n; ++j) e[j] = circulant_two_eigenvalue(n, jumps, j);
    std::sort(e.begin(), e.end());
    return e;
}

// ---- second-smallest eigenvalues and the connectivity sandwich ---------------

inline double second_smallest(const eigen_list& eigs) {
    if (eigs.size() < 2) throw std::invalid_argument("second_smallest: need >= 2 eigenvalues");
    return eigs[1];
}

/// Algebraic connectivity mu_2 of the ordinary Laplacian.
inline double fiedler_value(const simple_graph& g) {
    return second_smallest(eig_symmetric(classic_matrix(g, classic_kind::laplacian)));
}

/// Sandwich between the order-2 and ordinary connectivities, asserted only
/// under the positive-semidefiniteness hypothesis on L^(2):
///   (4/3) mu_2 - n(n-2)/6  <=  lambda_2  <=  (4/3) mu_2.
struct fiedler_report {
    bool psd = false;      // hypothesis; the bound is only claimed when true
    double lambda2 = 0;    // second-smallest of L^(2)
    double mu2 = 0;        // second-smallest of L
    double lower = 0, upper = 0;
    bool holds = false;    // lower - tol <= lambda2 <= upper + tol
};

inline fiedler_report fiedler_bound_check(const simple_graph& g, double tol = 1e-9) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("fiedler_bound_check: need n >= 3");
    fiedler_report r;
    const auto l2 = m_laplacian(g, 2);
    r.psd = is_psd(l2);
    r.lambda2 = second_smallest(eig_symmetric(l2));
    r.mu2 = fiedler_value(g);
    r.upper = 4.0 / 3.0 * r.mu2;
    r.lower = r.upper - double(n) * (n - 2) / 6.0;
    r.holds = (r.lower - tol <= r.lambda2) && (r.lambda2 <= r.upper + tol);
    return r;
}

}  // namespace mlap
