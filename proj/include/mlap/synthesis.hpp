#pragma once

#include "mlap/errors.hpp"
#include "mlap/jacobi.hpp"
#include "mlap/laplacian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlap {

namespace detail {

struct lu_factors {
    matrix<double> a;      // packed L\U
    std::vector<int> piv;  // row permutation
};

inline lu_factors lu_factor(matrix<double> a) {
    const int n = static_cast<int>(a.rows());
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int c = 0; c < n; ++c) {
        int best = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(best, c))) best = r;
        if (a(best, c) == 0.0) throw conditioning_error("sine system is numerically singular");
        if (best != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(best, j));
            std::swap(piv[c], piv[best]);
        }
        for (int r = c + 1; r < n; ++r) {
            a(r, c) /= a(c, c);
            for (int j = c + 1; j < n; ++j) a(r, j) -= a(r, c) * a(c, j);
        }
    }
    return {std::move(a), std::move(piv)};
}

inline std::vector<double> lu_solve(const lu_factors& f, const std::vector<double>& b) {
    const int n = static_cast<int>(f.a.rows());
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.piv[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.a(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.a(i, j) * x[j];
        x[i] /= f.a(i, i);
    }
    return x;
}

inline double inf_norm(const matrix<double>& a) {
    double worst = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        worst = std::max(worst, s);
    }
    return worst;
}

/// Max-norm condition estimate via the explicit inverse (m is tiny).
inline double condition_estimate(const matrix<double>& a, const lu_factors& f) {
    const int n = static_cast<int>(a.rows());
    double inv_norm = 0;
    std::vector<double> rowsum(n, 0.0);
    for (int c = 0; c < n; ++c) {
        std::vector<double> e(n, 0.0);
        e[c] = 1.0;
        const auto col = lu_solve(f, e);
        for (int r = 0; r < n; ++r) rowsum[r] += std::abs(col[r]);
    }
    for (double s : rowsum) inv_norm = std::max(inv_norm, s);
    return inf_norm(a) * inv_norm;
}

}  // namespace detail

// ---- target shapes ----------------------------------------------------------

/// A prescribed Laplacian spectrum in one of the two realizable shapes:
///   odd  (n = 2m+1): {l_1, l_1, ..., l_m, l_m, 0}
///   even (n = 2m):   {l_1, l_1, ..., l_{m-1}, l_{m-1}, 0, l}
/// The 0 is the forced kernel eigenvalue; the unpaired l of the even shape
/// sits at the antipodal Fourier index and is freely choosable.
struct target_spectrum {
    enum class shape_kind { odd, even };

    shape_kind shape;
    std::vector<double> paired;          // m values (odd) or m-1 values (even)
    double unpaired = 0;                 // even shape only

    static target_spectrum odd_target(std::vector<double> lams) {
        if (lams.empty()) throw std::invalid_argument("odd target: need m >= 1 values");
        return {shape_kind::odd, std::move(lams), 0};
    }

    static target_spectrum even_target(std::vector<double> lams, double lam) {
        return {shape_kind::even, std::move(lams), lam};
    }

    int m() const {
        return static_cast<int>(paired.size()) + (shape == shape_kind::even ? 1 : 0);
    }
    int n() const { return shape == shape_kind::odd ? 2 * m() + 1 : 2 * m(); }

    /// The full eigenvalue multiset, sorted ascending.
    std::vector<double> full_multiset() const {
        std::vector<double> all;
        for (double l : paired) {
            all.push_back(l);
            all.push_back(l);
        }
        all.push_back(0);
        if (shape == shape_kind::even) all.push_back(unpaired);
        std::sort(all.begin(), all.end());
        return all;
    }

    /// Right-hand side of the sine solve, one value per Fourier index 1..m.
    std::vector<double> rhs() const {
        std::vector<double> r = paired;
        if (shape == shape_kind::even) r.push_back(unpaired);
        return r;
    }

    /// Classifies a raw multiset into one of the two shapes: one 0 is
    /// removed, the rest must pair up (with one leftover for even sizes).
    static target_spectrum parse(std::vector<double> values, double tol = 1e-9) {
        if (values.size() < 3) throw std::invalid_argument("target: need >= 3 eigenvalues");
        std::sort(values.begin(), values.end());
        auto zero = values.end();
        for (auto it = values.begin(); it != values.end(); ++it)
            if (std::abs(*it) <= tol) { zero = it; break; }
        if (zero == values.end())
            throw std::invalid_argument("target: a Laplacian spectrum must contain 0");
        values.erase(zero);

        const bool odd = values.size() % 2 == 0;  // n odd <=> 2m values remain
        std::vector<double> pairs;
        std::optional<double> single;
        for (std::size_t i = 0; i < values.size();) {
            if (i + 1 < values.size() && std::abs(values[i + 1] - values[i]) <= tol) {
                pairs.push_back(values[i]);
                i += 2;
            } else if (!single && !odd) {
                single = values[i];
                i += 1;
            } else {
                throw std::invalid_argument(
                    "target: multiset does not match a realizable shape (values must "
                    "come in equal pairs, plus one free value when n is even)");
            }
        }
        if (odd) return odd_target(std::move(pairs));
        // an odd remainder count cannot fully pair, so single is set here
        return even_target(std::move(pairs), *single);
    }
};

// ---- the sine system ----------------------------------------------------------

/// The m x m matrix Z(j,k) = sin^2(pi j k / n) for n = 2m+1 or n = 2m;
/// nonsingular in both cases. Solving 4 Z c = lambda yields circulant jump
/// weights realizing the target spectrum.
inline matrix<double> sine_system_matrix(int n, int m) {
    if (m < 1) throw std::invalid_argument("sine_system_matrix: need m >= 1");
    if (n != 2 * m + 1 && n != 2 * m)
        throw std::invalid_argument("sine_system_matrix: need n = 2m+1 or n = 2m");
    matrix<double> z(m, m);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
            z(j - 1, k - 1) = std::pow(std::sin(std::numbers::pi * j * k / n), 2);
    return z;
}

struct build_report {
    weighted_graph graph;           // realizing weighted circulant, n vertices
    std::vector<double> weights;    // c_1..c_m (even shape: c_m already doubled)
    bool negated = false;           // true if only the sign-flipped solve verified
    double condition = 0;           // max-norm condition estimate of 4Z
    double max_residual = 0;        // worst |spec - target| over the multiset
};

namespace detail {

inline weighted_graph assemble_circulant(int n, const std::vector<double>& c) {
    weighted_graph w(n);
    const int m = static_cast<int>(c.size());
    for (int k = 1; k <= m; ++k) {
        if (c[k - 1] == 0.0) continue;
        // double -> Rational is exact, so the weighted Laplacian downstream
        // is an exact object even though the weights came from a solve
        const Rational ck(c[k - 1]);
        if (2 * k == n) {
            for (int i = 0; i < n / 2; ++i) w.set_weight(i, i + n / 2, ck);
        } else {
            for (int i = 0; i < n; ++i) {
                w.set_weight(i, (i + k) % n, ck);
            }
        }
    }
    return w;
}

inline double verify_against(const weighted_graph& w, const std::vector<double>& target) {
    const auto spec = eig_symmetric(weighted_laplacian(w));
    double worst = 0;
    for (std::size_t i = 0; i < target.size(); ++i)
        worst = std::max(worst, std::abs(spec[i] - target[i]) / (1.0 + std::abs(target[i])));
    return worst;
}

}  // namespace detail

/// Realizes a target spectrum as a weighted circulant on n vertices
/// (construct-and-verify; the verified sign convention is 4 Z c = lambda,
/// and the negated system is retried automatically if verification fails).
inline build_report build_weighted_from_spectrum(const target_spectrum& target,
                                                 double tol = 1e-8) {
    const int m = target.m();
    const int n = target.n();
    auto z = sine_system_matrix(n, m) * 4.0;
    const auto f = detail::lu_factor(z);
    const double cond = detail::condition_estimate(z, f);
    if (cond > 1e12) {
        std::ostringstream os;
        os << "sine system too ill-conditioned (estimate " << cond << ") for m = " << m;
        throw conditioning_error(os.str());
    }

    const auto rhs = target.rhs();
    auto c = detail::lu_solve(f, rhs);
    {   // one step of iterative refinement, residual in extended precision
        std::vector<double> r(m);
        for (int i = 0; i < m; ++i) {
            long double acc = rhs[i];
            for (int j = 0; j < m; ++j)
                acc -= static_cast<long double>(z(i, j)) * c[j];
            r[i] = static_cast<double>(acc);
        }
        const auto dc = detail::lu_solve(f, r);
        for (int i = 0; i < m; ++i) c[i] += dc[i];
    }
    if (target.shape == target_spectrum::shape_kind::even) c[m - 1] *= 2;  // antipodal edge is single

    const auto want = target.full_multiset();
    build_report rep{detail::assemble_circulant(n, c), c, false, cond, 0};
    rep.max_residual = detail::verify_against(rep.graph, want);
    if (rep.max_residual > tol) {
        std::vector<double> neg(c);
        for (auto& x : neg) x = -x;
        build_report flipped{detail::assemble_circulant(n, neg), neg, true, cond, 0};
        flipped.max_residual = detail::verify_against(flipped.graph, want);
        if (flipped.max_residual <= tol) return flipped;
        std::ostringstream os;
        os << "spectrum realization failed to verify: residual " << rep.max_residual
           << " (direct) / " << flipped.max_residual << " (negated), tolerance " << tol;
        throw std::runtime_error(os.str());
    }
    return rep;
}

// ---- spectrum embedding by vertex deletion ------------------------------------

/// Outcome of embedding a free multiset of size m into a 2m-vertex object.
/// Both readings of "delete a vertex" are computed: the principal submatrix
/// of the parent Laplacian (classical interlacing applies to it, so the
/// containment provably holds there) and the re-assembled Laplacian of the
/// weight matrix with the vertex removed.
struct embed_report {
    weighted_graph parent;          // realizing graph on 2m+1 vertices
    weighted_graph deleted;         // parent minus its last vertex (weights only)
    eigen_list principal_spectrum;  // principal 2m x 2m submatrix of L_parent
    eigen_list rebuilt_spectrum;    // weighted_laplacian(deleted)
    bool principal_contains = false;
    bool rebuilt_contains = false;
    double principal_residual = 0;  // worst matched |difference|
    double rebuilt_residual = 0;
};

namespace detail {

/// Greedy sorted multiset matching; returns the worst matched difference
/// (infinity when the candidates run out, i.e. a definite mismatch).
/// Smallest achievable worst |difference| over injective matchings of
/// `wanted` into `have`, both treated as multisets. With both lists sorted
/// some optimal matching is monotone, so a skip-or-match scan over the two
/// sorted lists is exact (a greedy nearest-neighbour walk is not: it can
/// spend a duplicated value's best slot on its twin).
inline double match_multiset(const std::vector<double>& wanted, const eigen_list& have) {
    std::vector<double> w = wanted;
    std::sort(w.begin(), w.end());
    const std::size_t m = w.size(), n = have.size();
    const double inf = std::numeric_limits<double>::infinity();
    if (m > n) return inf;
    std::vector<double> below(n + 1, 0.0);  // DP row for w[i+1..)
    std::vector<double> row(n + 1);
    for (std::size_t i = m; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            if (n - j < m - i) {
                row[j] = inf;  // fewer slots left than values to place
                continue;
            }
            const double matched = std::max(std::abs(have[j] - w[i]), below[j + 1]);
            row[j] = std::min(matched, row[j + 1]);  // match w[i] here, or skip have[j]
        }
        std::swap(below, row);
    }
    return below[0];
}

}  // namespace detail

inline embed_report embed_spectrum(const std::vector<double>& lambda, double tol = 1e-7) {
    if (lambda.empty()) throw std::invalid_argument("embed_spectrum: need at least one value");
    const int m = static_cast<int>(lambda.size());
    auto built = build_weighted_from_spectrum(target_spectrum::odd_target(lambda));
    const int n = 2 * m + 1;

    weighted_graph deleted(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j) deleted.w(i, j) = deleted.w(j, i) = built.graph.w(i, j);

    const auto parent_l = weighted_laplacian(built.graph);
    embed_report rep{std::move(built.graph), std::move(deleted), {}, {}, false, false, 0, 0};
    rep.principal_spectrum = jacobi_eigenvalues(to_double(parent_l.without(n - 1)));
    rep.rebuilt_spectrum = eig_symmetric(weighted_laplacian(rep.deleted));
    rep.principal_residual = detail::match_multiset(lambda, rep.principal_spectrum);
    rep.rebuilt_residual = detail::match_multiset(lambda, rep.rebuilt_spectrum);
    rep.principal_contains = rep.principal_residual <= tol;
    rep.rebuilt_contains = rep.rebuilt_residual <= tol;
    if (!rep.principal_contains && !rep.rebuilt_contains) {
        std::ostringstream os;
        os << "embedding assertion failed; principal residual " << rep.principal_residual
           << ", rebuilt residual " << rep.rebuilt_residual << "\nprincipal spectrum:";
        for (double e : rep.principal_spectrum) os << ' ' << e;
        os << "\nrebuilt spectrum:";
        for (double e : rep.rebuilt_spectrum) os << ' ' << e;
        throw std::runtime_error(os.str());
    }
    return rep;
}

}  // namespace mlap
