#pragma once

#include "mlap/laplacian.hpp"
#include "mlap/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mlap {

/// Characteristic polynomial det(xI - M) of an integer matrix, computed
/// division-free (Samuelson/Berkowitz vector recurrence), so every
/// intermediate stays an exact integer. Returns n+1 coefficients in
/// descending degree; the leading one is 1. The charpoly of a block direct
/// sum is the product of the blocks' charpolys.
inline std::vector<Integer> berkowitz_charpoly(const matrix<Integer>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly: matrix must be square");
    std::vector<Integer> prev{1};  // charpoly of the empty matrix
    for (std::size_t r = 1; r <= n; ++r) {
        // Principal r x r block. s holds  a, R C, R M C, R M^2 C, ...  with
        // a the new diagonal entry, R/C the new row/column, M the old block.
        std::vector<Integer> s;
        s.reserve(r);
        s.push_back(m(r - 1, r - 1));
        if (r > 1) {
            std::vector<Integer> vec(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i) vec[i] = m(i, r - 1);
            for (std::size_t step = 0; step + 1 < r; ++step) {
                Integer dot = 0;
                for (std::size_t i = 0; i < r - 1; ++i) dot += m(r - 1, i) * vec[i];
                s.push_back(dot);
                if (step + 2 < r) {
                    std::vector<Integer> nxt(r - 1);
                    for (std::size_t i = 0; i < r - 1; ++i) {
                        Integer acc = 0;
                        for (std::size_t j = 0; j < r - 1; ++j) acc += m(i, j) * vec[j];
                        nxt[i] = std::move(acc);
                    }
                    vec = std::move(nxt);
                }
            }
        }
        // Multiply prev by the Toeplitz column [1, -s_0, -s_1, ...].
        std::vector<Integer> toep(r + 1);
        toep[0] = 1;
        for (std::size_t i = 0; i < r; ++i) toep[i + 1] = -s[i];
        std::vector<Integer> cur(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < prev.size(); ++j)
                if (i >= j && i - j < toep.size()) acc += toep[i - j] * prev[j];
            cur[i] = std::move(acc);
        }
        prev = std::move(cur);
    }
    return prev;
}

/// Canonical cospectrality fingerprint. A rational symmetric matrix is
/// scale-cleared to integers; the stored key is that integer charpoly plus
/// the scale. Two matrices are cospectral iff their monic rational
/// charpolys agree, i.e. c_k / s^k matches entrywise — tested here by
/// cross-multiplication so everything stays integral.
struct spectral_key {
    Integer scale;                // positive
    std::vector<Integer> coeffs;  // descending degree, leading 1

    std::size_t degree() const { return coeffs.size() - 1; }

    bool operator==(const spectral_key& o) const {
        if (coeffs.size() != o.coeffs.size()) return false;
        Integer sk = 1, ok = 1;  // scale^k, o.scale^k
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] * ok != o.coeffs[k] * sk) return false;
            sk *= scale;
            ok *= o.scale;
        }
        return true;
    }
    bool operator!=(const spectral_key& o) const { return !(*this == o); }

    /// Hashable canonical rendering: the reduced monic rational
    /// coefficients, independent of the particular scale.
    std::string canonical_string() const {
        std::string s = "deg" + std::to_string(degree());
        Integer sk = 1;
        for (std::size_t k = 1; k < coeffs.size(); ++k) {
            sk *= scale;
            s += "," + rational_to_string(Rational(coeffs[k], sk));
        }
        return s;
    }
};

inline spectral_key char_poly_exact(const matrix<Rational>& m) {
    auto scaled = integer_scaled(m);
    return {scaled.scale, berkowitz_charpoly(scaled.m)};
}

inline spectral_key char_poly_exact(const matrix<Integer>& m) {
    return {Integer(1), berkowitz_charpoly(m)};
}

/// Exact positive semidefiniteness for symmetric rational matrices. With
/// charpoly sum p_k x^(n-k), p_k = (-1)^k e_k(eigenvalues), and a symmetric
/// matrix is PSD iff every e_k >= 0, i.e. iff the p_k alternate in sign:
/// (-1)^k p_k >= 0 for all k. No floating arithmetic is involved, so an
/// eigenvalue exactly at 0 cannot be misclassified.
inline bool is_psd(const matrix<Rational>& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd: matrix must be symmetric");
    const auto key = char_poly_exact(m);
    for (std::size_t k = 0; k < key.coeffs.size(); ++k) {
        const bool nonneg = (k % 2 == 0) ? key.coeffs[k] >= 0 : key.coeffs[k] <= 0;
        if (!nonneg) return false;
    }
    return true;
}

}  // namespace mlap
