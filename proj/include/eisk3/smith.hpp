#pragma once

#include "eisk3/matrix.hpp"

namespace eisk3 {

struct SmithForm {
    IMat d;  // diagonal, d_i | d_{i+1}, nonnegative
    IMat p;  // unimodular, p * m * q == d
    IMat q;  // unimodular
};

/// Smith normal form with unimodular transforms, P*M*Q = D.
inline SmithForm smith_normal_form(const IMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    IMat a = m;
    IMat p = IMat::identity(rows), q = IMat::identity(cols);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < rows; ++k) std::swap(p(i, k), p(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < cols; ++k) std::swap(q(k, i), q(k, j));
    };
    auto row_addmul = [&](std::size_t i, std::size_t j, const Int& c) {  // row_i += c*row_j
        for (std::size_t k = 0; k < cols; ++k) a(i, k) += c * a(j, k);
        for (std::size_t k = 0; k < rows; ++k) p(i, k) += c * p(j, k);
    };
    auto col_addmul = [&](std::size_t i, std::size_t j, const Int& c) {  // col_i += c*col_j
        for (std::size_t k = 0; k < rows; ++k) a(k, i) += c * a(k, j);
        for (std::size_t k = 0; k < cols; ++k) q(k, i) += c * q(k, j);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < rows; ++k) p(i, k) = -p(i, k);
    };

    std::size_t t = std::min(rows, cols);
    for (std::size_t r = 0; r < t; ++r) {
        // pick the nonzero entry of smallest magnitude as pivot
        bool found = false;
        std::size_t bi = r, bj = r;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                    bi = i; bj = j; found = true;
                }
        if (!found) break;
        if (bi != r) row_swap(r, bi);
        if (bj != r) col_swap(r, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, r) == 0) continue;
                Int c = floor_div(a(i, r), a(r, r));
                row_addmul(i, r, -c);
                if (a(i, r) != 0) { row_swap(r, i); clean = false; }
            }
            for (std::size_t j = r + 1; j < cols; ++j) {
                if (a(r, j) == 0) continue;
                Int c = floor_div(a(r, j), a(r, r));
                col_addmul(j, r, -c);
                if (a(r, j) != 0) { col_swap(r, j); clean = false; }
            }
            if (!clean) continue;
            // pivot must divide the remaining block
            bool divides = true;
            for (std::size_t i = r + 1; i < rows && divides; ++i)
                for (std::size_t j = r + 1; j < cols && divides; ++j)
                    if (a(i, j) % a(r, r) != 0) {
                        row_addmul(r, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(r, r) < 0) row_negate(r);
    }

    IMat d(rows, cols);
    for (std::size_t i = 0; i < t; ++i) d(i, i) = a(i, i);
    return SmithForm{d, p, q};
}

/// Elementary divisors > 1 of a square nondegenerate integer matrix.
inline IVec elementary_divisors(const IMat& m) {
    SmithForm s = smith_normal_form(m);
    IVec out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.d(i, i) > 1) out.push_back(s.d(i, i));
    return out;
}

/// Row-style Hermite normal form: returns a basis (as rows) of the row span.
inline IMat hnf_row_basis(const IMat& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    IMat a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(piv, k));
        for (;;) {
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Int f = floor_div(a(i, c), a(r, c));
                for (std::size_t k = 0; k < cols; ++k) a(i, k) -= f * a(r, k);
                if (a(i, c) != 0) {
                    for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(i, k));
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (a(r, c) < 0)
            for (std::size_t k = 0; k < cols; ++k) a(r, k) = -a(r, k);
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floor_div(a(i, c), a(r, c));
            if (f != 0)
                for (std::size_t k = 0; k < cols; ++k) a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    IMat basis(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) basis(i, j) = a(i, j);
    return basis;
}

}  // namespace eisk3
