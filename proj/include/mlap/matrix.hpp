#pragma once

#include "mlap/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlap {

/// Dense row-major matrix over an exact scalar type (Integer, Rational) or a
/// floating type. Sized for the problem domain: n up to a few hundred, with
/// most work on n <= 9.
template <class T>
class matrix {
public:
    matrix() = default;
    matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const matrix& o) const { return !(*this == o); }

    matrix& operator+=(const matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    matrix& operator-=(const matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend matrix operator+(matrix a, const matrix& b) { return a += b; }
    friend matrix operator-(matrix a, const matrix& b) { return a -= b; }
    friend matrix operator*(matrix a, const T& s) { return a *= s; }
    friend matrix operator*(const T& s, matrix a) { return a *= s; }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    matrix transposed() const {
        matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    T row_sum(std::size_t i) const {
        T s(0);
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
        return s;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    /// Principal submatrix with row/column `v` removed.
    matrix without(std::size_t v) const {
        if (rows_ != cols_ || v >= rows_) throw std::invalid_argument("without: bad index");
        matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
            if (i == v) continue;
            for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
                if (j == v) continue;
                m(ii, jj) = (*this)(i, j);
                ++jj;
            }
            ++ii;
        }
        return m;
    }

private:
    void require_same_shape(const matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T>
matrix<T> kronecker(const matrix<T>& a, const matrix<T>& b) {
    matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T(0)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

template <class T>
matrix<T> block_diag(const matrix<T>& a, const matrix<T>& b) {
    matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

template <class T>
matrix<Rational> to_rational(const matrix<T>& m) {
    matrix<Rational> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline matrix<double> to_double(const matrix<Rational>& m) {
    matrix<double> d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
    return d;
}

inline matrix<double> to_double(const matrix<Integer>& m) {
    matrix<double> d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = to_double(m(i, j));
    return d;
}

namespace detail {
inline std::string entry_to_string(const Rational& x) { return rational_to_string(x); }
inline std::string entry_to_string(const Integer& x) { return x.str(); }
inline std::string entry_to_string(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}
}  // namespace detail

/// Row-per-line rendering with right-aligned columns; diff-friendly.
template <class T>
std::string format_matrix(const matrix<T>& m) {
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto& c = cells[i * m.cols() + j] = detail::entry_to_string(m(i, j));
            width[j] = std::max(width[j], c.size());
        }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& c = cells[i * m.cols() + j];
            out.append(width[j] - c.size(), ' ');
            out += c;
            if (j + 1 < m.cols()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

}  // namespace mlap
