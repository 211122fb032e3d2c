#pragma once

// Independent oracles for the test suite. These deliberately avoid the code
// paths they check: cofactor determinants against Bareiss, gcd-style divisor
// reduction against the transform-tracking Smith form, Jacobi leading-minor
// signatures against congruence diagonalization, and a brute small-vector
// isometry search against shipped basis changes.

#include "eisk3/lattice.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace eisk3::testing {

class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        s_ = s_ * 6364136223846793005ull + 1442695040888963407ull;
        return s_ >> 17;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

inline Int oracle_det_cofactor(const IMat& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int result = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, cc++) = m(i, k);
            }
        }
        Int term = m(0, j) * oracle_det_cofactor(minor);
        result += (j % 2 == 0) ? term : -term;
    }
    return result;
}

/// Elementary divisors by plain gcd row/column reduction, no transforms.
inline IVec oracle_snf_divisors(IMat a) {
    std::size_t rows = a.rows(), cols = a.cols(), t = std::min(rows, cols);
    std::vector<Int> diag;
    for (std::size_t r = 0; r < t; ++r) {
        bool found = false;
        std::size_t bi = r, bj = r;
        for (;;) {
            found = false;
            for (std::size_t i = r; i < rows; ++i)
                for (std::size_t j = r; j < cols; ++j)
                    if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
            if (!found) break;
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(bi, k));
            for (std::size_t k = 0; k < rows; ++k) std::swap(a(k, r), a(k, bj));
            bool dirty = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                Int q = floor_div(a(i, r), a(r, r));
                if (q != 0)
                    for (std::size_t k = 0; k < cols; ++k) a(i, k) -= q * a(r, k);
                if (a(i, r) != 0) dirty = true;
            }
            for (std::size_t j = r + 1; j < cols; ++j) {
                Int q = floor_div(a(r, j), a(r, r));
                if (q != 0)
                    for (std::size_t k = 0; k < rows; ++k) a(k, j) -= q * a(k, r);
                if (a(r, j) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (!found && a(r, r) == 0) break;
        diag.push_back(abs(a(r, r)));
    }
    // enforce divisibility pairwise by gcd/lcm exchanges
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Int g = boost::multiprecision::gcd(diag[i], diag[j]);
            Int l = (g == 0) ? Int(0) : diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

/// Jacobi rule: after a random unimodular congruence making every leading
/// principal minor nonzero, the negative count is the number of sign changes
/// in 1, D1, ..., Dn.
inline Signature oracle_signature_minors(const QMat& gram, Lcg& rng) {
    std::size_t n = gram.rows();
    for (int attempt = 0; attempt < 200; ++attempt) {
        IMat t = IMat::identity(n);
        if (attempt > 0) {
            // random unimodular: products of elementary row additions
            for (int step = 0; step < 12; ++step) {
                std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<long long>(n) - 1));
                std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long long>(n) - 1));
                if (i == j) continue;
                Int c = rng.range(-2, 2);
                for (std::size_t k = 0; k < n; ++k) t(i, k) += c * t(j, k);
            }
        }
        QMat tq = to_rational(t);
        QMat m = tq * gram * tq.transposed();
        // leading principal minors
        std::vector<Rat> minors(n + 1, Rat(1));
        bool ok = true;
        for (std::size_t k = 1; k <= n; ++k) {
            QMat sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
            minors[k] = det(sub);
            if (minors[k] == 0) { ok = false; break; }
        }
        if (!ok) continue;
        Signature s;
        for (std::size_t k = 1; k <= n; ++k) {
            bool change = (minors[k - 1] > 0) != (minors[k] > 0);
            if (change) ++s.negative; else ++s.positive;
        }
        return s;
    }
    throw domain_error("oracle_signature_minors: could not reach nonzero minors");
}

/// Search integer matrices T with T^T A T = B and det +-1, coordinates
/// bounded; practical for rank <= 4.
inline std::optional<IMat> find_isometry_small(const IMat& a, const IMat& b, long long bound) {
    std::size_t n = a.rows();
    if (b.rows() != n) return std::nullopt;
    std::vector<IVec> candidates;
    IVec v(n, Int(0));
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i == n) {
            for (const auto& x : v)
                if (x != 0) { candidates.push_back(v); return; }
            return;
        }
        for (long long c = -bound; c <= bound; ++c) {
            v[i] = c;
            gen(i + 1);
        }
        v[i] = 0;
    };
    gen(0);
    std::vector<IVec> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t col) -> bool {
        if (col == n) {
            IMat t(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) t(i, j) = chosen[j][i];
            if (abs(det(t)) != 1) return false;
            return true;
        }
        for (const auto& c : candidates) {
            if (dot(c, a, c) != b(col, col)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < col && ok; ++j)
                if (dot(chosen[j], a, c) != b(j, col)) ok = false;
            if (!ok) continue;
            chosen.push_back(c);
            if (rec(col + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    IMat t(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) t(i, j) = chosen[j][i];
    return t;
}

}  // namespace eisk3::testing
