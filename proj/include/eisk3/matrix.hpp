#pragma once

#include "eisk3/common.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace eisk3 {

/// Dense matrix over an exact scalar (Int, Rat, ...). Sizes here never exceed ~30.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            EISK3_REQUIRE(row.size() == cols_, "matrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        EISK3_REQUIRE(cols_ == o.rows_, "matrix: dimension mismatch in product");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        EISK3_REQUIRE(rows_ == o.rows_ && cols_ == o.cols_, "matrix: dimension mismatch in sum");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        EISK3_REQUIRE(rows_ == o.rows_ && cols_ == o.cols_, "matrix: dimension mismatch in difference");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    Mat scaled(const T& c) const {
        Mat r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        EISK3_REQUIRE(v.size() == cols_, "matrix: dimension mismatch in apply");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != T(0)) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline QMat to_rational(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

inline IMat to_integer(const QMat& m) {
    IMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            EISK3_REQUIRE(is_integral(m(i, j)), "matrix: entry not integral");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

template <typename T>
Mat<T> block_diag(const std::vector<Mat<T>>& blocks) {
    std::size_t n = 0, m = 0;
    for (const auto& b : blocks) { n += b.rows(); m += b.cols(); }
    Mat<T> r(n, m);
    std::size_t oi = 0, oj = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(oi + i, oj + j) = b(i, j);
        oi += b.rows();
        oj += b.cols();
    }
    return r;
}

// Kronecker product, index (i,j) -> i*B.rows()+j.
template <typename T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

/// Exact determinant by Bareiss fraction-free elimination.
inline Int det(const IMat& m) {
    EISK3_REQUIRE(m.rows() == m.cols(), "det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline Rat det(const QMat& m) {
    EISK3_REQUIRE(m.rows() == m.cols(), "det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    QMat a = m;
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
            d = -d;
        }
        d *= a(c, c);
        Rat pv = a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / pv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

/// Exact inverse over the rationals (Gauss-Jordan).
inline QMat inverse(const QMat& m) {
    EISK3_REQUIRE(m.rows() == m.cols(), "inverse: matrix not square");
    std::size_t n = m.rows();
    QMat a = m, inv = QMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        EISK3_REQUIRE(p < n, "inverse: singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        Rat pv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) { a(c, j) /= pv; inv(c, j) /= pv; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

inline QMat inverse(const IMat& m) { return inverse(to_rational(m)); }

template <typename T>
T dot(const std::vector<T>& a, const Mat<T>& g, const std::vector<T>& b) {
    EISK3_REQUIRE(a.size() == g.rows() && b.size() == g.cols(), "dot: dimension mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == T(0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g(i, j) * b[j];
    }
    return s;
}

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace eisk3
