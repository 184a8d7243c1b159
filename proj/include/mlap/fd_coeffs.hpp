#pragma once

#include "mlap/matrix.hpp"
#include "mlap/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mlap {

/// Central-difference weights a_{k,m}: the unique coefficients for which
///   (1/h^2) sum_k a_{k,m} (u(x+kh) - 2u(x) + u(x-kh))
/// approximates u'' to order 2m on a periodic grid. Closed form:
///   a_{k,m} = (-1)^{k+1} * 2 * C(2m, m-k) / (k^2 * C(2m, m)).
inline Rational coeff(int k, int m) {
    if (m < 1 || k < 1 || k > m)
        throw std::invalid_argument("coeff: need 1 <= k <= m");
    Rational a(2 * binomial(2 * m, m - k), Integer(k) * k * binomial(2 * m, m));
    return (k % 2 == 0) ? -a : a;
}

inline std::vector<Rational> coeff_row(int m) {
    std::vector<Rational> row;
    row.reserve(m);
    for (int k = 1; k <= m; ++k) row.push_back(coeff(k, m));
    return row;
}

/// Solves the defining moment system directly: sum_k a_k k^(2j) = [j == 1]
/// for j = 1..m. Fraction-free Bareiss elimination over integers (the system
/// matrix k^(2j) is already integral), with a rational back-substitution.
/// Independent of coeff(); the two must agree exactly.
inline std::vector<Rational> solve_coeff_system(int m) {
    if (m < 1) throw std::invalid_argument("solve_coeff_system: need m >= 1");
    const int n = m;
    // augmented [V | e_1], V(j,k) = (k+1)^(2(j+1)) zero-based
    matrix<Integer> a(n, n + 1);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) a(j, k) = ipow(Integer(k + 1), 2 * (j + 1));
        a(j, n) = (j == 0) ? 1 : 0;
    }
    Integer prev = 1;
    for (int p = 0; p < n - 1; ++p) {
        if (a(p, p) == 0) {
            int s = p + 1;
            while (s < n && a(s, p) == 0) ++s;
            if (s == n) throw std::logic_error("coefficient system singular");  // provably impossible
            for (int c = 0; c <= n; ++c) std::swap(a(p, c), a(s, c));
        }
        for (int r = p + 1; r < n; ++r) {
            for (int c = p + 1; c <= n; ++c) {
                a(r, c) = (a(p, p) * a(r, c) - a(r, p) * a(p, c)) / prev;  // exact division
            }
            a(r, p) = 0;
        }
        prev = a(p, p);
    }
    std::vector<Rational> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational s(a(r, n));
        for (int c = r + 1; c < n; ++c) s -= Rational(a(r, c)) * x[c];
        x[r] = s / Rational(a(r, r));
    }
    return x;
}

/// Periodic samples u_i = u(x_i), x_i = (i - 1/2) h, wrapping mod n.
struct stencil_samples {
    std::vector<double> values;
    double h = 0;
    std::size_t n() const { return values.size(); }
};

namespace detail {

template <class Real>
std::vector<Real> apply_stencil(const std::vector<Real>& u, Real h, int m) {
    const std::size_t n = u.size();
    if (m < 1 || static_cast<std::size_t>(m) >= n)
        throw std::invalid_argument("apply_stencil: need 1 <= m < n");
    std::vector<Real> a(m);
    for (int k = 1; k <= m; ++k) a[k - 1] = coeff(k, m).template convert_to<Real>();
    std::vector<Real> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Real acc = 0;
        for (int k = 1; k <= m; ++k)
            acc += a[k - 1] * (u[(i + k) % n] - 2 * u[i] + u[(i + n - k % n) % n]);
        out[i] = acc / (h * h);
    }
    return out;
}

}  // namespace detail

/// The discrete operator at order 2m in double precision.
inline std::vector<double> apply_discrete_laplacian(const stencil_samples& u, int m) {
    return detail::apply_stencil<double>(u.values, u.h, m);
}

struct convergence_report {
    std::vector<int> grids;
    std::vector<double> max_error;
    double slope = 0;  // least-squares slope of log(err) vs log(h); expect ~2m
};

/// Empirical order-of-accuracy study for u = sin (or cos) on [0, 2pi).
/// Runs in extended precision: at order 6 the truncation error near n=256
/// drops to ~2e-12, below double's amplified rounding floor (~1/h^2 * ulp),
/// which would otherwise flatten the fitted slope.
inline convergence_report convergence_study(int m, const std::vector<int>& grids,
                                            const std::string& func = "sin") {
    if (func != "sin" && func != "cos")
        throw std::invalid_argument("convergence_study: func must be sin or cos");
    convergence_report rep;
    rep.grids = grids;
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    for (int n : grids) {
        if (n <= 2 * m) throw std::invalid_argument("convergence_study: grid too coarse for m");
        const long double h = two_pi / n;
        std::vector<long double> u(n);
        for (int i = 0; i < n; ++i) {
            const long double x = (i - 0.5L) * h;
            u[i] = (func == "sin") ? sinl(x) : cosl(x);
        }
        auto du = detail::apply_stencil<long double>(u, h, m);
        long double worst = 0;
        for (int i = 0; i < n; ++i) {
            // exact second derivative of sin/cos is its own negation
            const long double err = fabsl(du[i] + u[i]);
            if (err > worst) worst = err;
        }
        rep.max_error.push_back(static_cast<double>(worst));
    }
    // slope of log(err) against log(h)
    const std::size_t k = grids.size();
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const long double x = logl(two_pi / grids[i]);
        const long double y = logl(static_cast<long double>(rep.max_error[i]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    rep.slope = static_cast<double>((k * sxy - sx * sy) / (k * sxx - sx * sx));
    return rep;
}

/// Coefficients c_0..c_m with  L^(m) of the n-cycle  =  sum_k c_k A^k,
/// valid whenever n > 2m (shorter cycles let powers of A wrap around).
/// The integer weights d_{j,k} follow the recurrence d_{j,1} = 2j-1,
/// d_{1,k} = 1, d_{j+1,k+1} = d_{j,k+1} + d_{j+1,k}.
inline std::vector<Rational> cycle_poly_coeffs(int m) {
    if (m < 1) throw std::invalid_argument("cycle_poly_coeffs: need m >= 1");
    const int jmax = m / 2 + 2;
    // d[j][k], 1-based in both indices
    std::vector<std::vector<Integer>> d(jmax + 2, std::vector<Integer>(m + 2, 0));
    for (int j = 1; j <= jmax + 1; ++j) d[j][1] = 2 * j - 1;
    for (int k = 1; k <= m + 1; ++k) d[1][k] = 1;
    for (int j = 1; j <= jmax; ++j)
        for (int k = 1; k <= m; ++k) d[j + 1][k + 1] = d[j][k + 1] + d[j + 1][k];

    const auto a = coeff_row(m);
    std::vector<Rational> c(m + 1);
    for (int j = 1; 2 * j - 1 <= m; ++j) c[0] += 2 * a[2 * j - 2];
    for (int j = 1; 4 * j - 2 <= m; ++j) c[0] += 4 * a[4 * j - 3];
    for (int k = 1; k <= m; ++k) {
        const int terms = (m - k + 2) / 2;
        for (int j = 1; j <= terms; ++j) {
            const Rational t = Rational(d[j][k]) * a[2 * j + k - 3];
            c[k] += (j % 2 == 1) ? -t : t;
        }
    }
    return c;
}

}  // namespace mlap
